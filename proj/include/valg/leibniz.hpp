#pragma once

#include "valg/report.hpp"
#include "valg/subspace.hpp"
#include "valg/trilinear.hpp"

#include <vector>

namespace valg {

/// Left Leibniz algebra: [a,[b,c]] = [[a,b],c] + [b,[a,c]].
struct LeibnizAlg {
  std::size_t dim = 0;
  Trilinear bracket;  // dim x dim -> dim

  Vec operator()(const Vec& x, const Vec& y) const { return bracket.apply(x, y); }
  /// Left multiplication y -> [b_i, y].
  RatMatrix ad(std::size_t i) const { return bracket.left_operator(i); }
  RatMatrix ad(const Vec& x) const { return bracket.left_operator(x); }
};

/// Left module: [u,v].m = u.(v.m) - v.(u.m).
struct LeibnizModule {
  LeibnizAlg alg;
  std::size_t dim = 0;
  Trilinear action;  // alg.dim x dim -> dim

  RatMatrix op(std::size_t i) const { return action.left_operator(i); }
};

enum class Side { left, right, two_sided };

std::vector<AxiomViolation> check_left_leibniz(const LeibnizAlg& l);
std::vector<AxiomViolation> check_module(const LeibnizModule& m);

/// Bracket restricted to antisymmetry: [b_i,b_j] + [b_j,b_i] = 0 for all i <= j.
bool is_lie(const LeibnizAlg& l);

/// span{[u,v] | u in U, v in W}
Subspace product_space(const LeibnizAlg& l, const Subspace& u, const Subspace& w);

/// span{[u,u]} = span{[b_i,b_j] + [b_j,b_i]}
Subspace leib_ideal(const LeibnizAlg& l);

/// s, [s,s], [[s,s],[s,s]], ... ending with the first member that is zero
/// or equal to its predecessor. Solvable iff the last member is zero.
std::vector<Subspace> derived_series(const LeibnizAlg& l, const Subspace& s);
std::vector<Subspace> derived_series(const LeibnizAlg& l);
bool is_solvable(const LeibnizAlg& l);

/// Structure constants of l / ideal on the complement-of-pivots basis.
LeibnizAlg quotient(const LeibnizAlg& l, const Subspace& ideal);

/// Gram matrix tr(ad x ad y) of the Killing form.
RatMatrix killing_form(const LeibnizAlg& l);

/// Maximal solvable ideal: the Killing-orthogonal of [g,g] in the Lie
/// algebra g = l/Leib(l), pulled back to l.
Subspace radical(const LeibnizAlg& l);

bool is_semisimple(const LeibnizAlg& l);

/// Lie algebra with [g,g] != 0, nondegenerate Killing form, and absolutely
/// irreducible adjoint representation.
bool is_simple_lie(const LeibnizAlg& g);

/// Simple in the Leibniz sense. With Leib = 0 this is Lie simplicity; with
/// Leib != 0 it requires l/Leib simple, Leib an irreducible nontrivial
/// l/Leib-module and [l,l] != Leib.
bool is_simple(const LeibnizAlg& l);

/// s closed, Lie, complementary to the radical.
bool verify_levi(const LeibnizAlg& l, const Subspace& s);

bool is_leibniz_ideal(const LeibnizAlg& l, const Subspace& s, Side side);

/// g + M with [u+m, v+n] = [u,v] + u.n. Throws std::invalid_argument when g is
/// not Lie or m is not a g-module.
LeibnizAlg build_hemisemidirect(const LeibnizAlg& g, const LeibnizModule& m);

/// sl2 in the basis (e, f, h) with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LeibnizAlg sl2();

/// Irreducible sl2-module of highest weight m (dimension m + 1) on a_0..a_m:
///   h a_i = (m-2i) a_i,  f a_i = (i+1) a_{i+1},  e a_i = (m-i+1) a_{i-1}.
LeibnizModule sl2_module(long m);

LeibnizModule direct_sum(const LeibnizModule& a, const LeibnizModule& b);

/// Module action matrices restricted to an invariant subspace, in the
/// coordinates of that subspace's basis. Throws if s is not invariant.
std::vector<RatMatrix> restrict_operators(std::span<const RatMatrix> ops, const Subspace& s);

}  // namespace valg
