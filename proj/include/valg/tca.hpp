#pragma once

#include "valg/leibniz.hpp"
#include "valg/report.hpp"
#include "valg/trilinear.hpp"

#include <vector>

namespace valg {

struct VertexAlgebroid;

/// 1-truncated conformal algebra C0 + C1. Only the degree-legal products are
/// stored; a_0u = -u_0a is implied and a_0a', a_1x, x_1a are zero.
///
/// Vectors on the whole space C0 + C1 put the C0 coordinates first, so basis
/// index i < d0 is in C0 and index d0 + j is the j-th basis vector of C1.
struct TCA {
  std::size_t d0 = 0;
  std::size_t d1 = 0;
  RatMatrix partial;  // d1 x d0
  Trilinear act0;     // C1 x C0 -> C0, u_0a
  Trilinear brk0;     // C1 x C1 -> C1, u_0v
  Trilinear pair1;    // C1 x C1 -> C0, u_1v

  std::size_t total_dim() const { return d0 + d1; }

  /// x_i y for i in {0, 1} on whole-space vectors.
  Vec product(int i, const Vec& x, const Vec& y) const;

  /// d on the C0 part of a whole-space vector, as a whole-space vector.
  Vec d(const Vec& x) const;
};

/// Zero structure of the given dimensions.
TCA make_tca(std::size_t d0, std::size_t d1);

/// Derivation, commutativity and associativity on all basis tuples.
/// Witness indices are whole-space indices.
std::vector<AxiomViolation> check_tca(const TCA& c);

/// The clause-by-clause characterization: C1 Leibniz, C0 a C1-module, d a
/// module map annihilating everything, the pairing a module map, and the four
/// displayed identities. Computed without going through check_tca.
Report check_prop_C0C1(const TCA& c);

/// C0 = C + A_M, C1 = g + M from a Lie algebra with a symmetric invariant
/// form (a g x g -> 1 table), modules M and A_M and an isomorphism phi from
/// A_M to M (a dim M x dim A_M matrix). The scalar line is C0 index 0.
/// Throws std::invalid_argument if a precondition fails.
TCA tca_from_lie_pair(const LeibnizAlg& g, const Trilinear& form, const LeibnizModule& m,
                      const LeibnizModule& a_m, const RatMatrix& phi);

/// Forgetful image C0 = A, C1 = Gamma. Throws std::invalid_argument if b
/// fails check_vertex_algebroid.
TCA tca_of_vertex_algebroid(const VertexAlgebroid& b);

}  // namespace valg
