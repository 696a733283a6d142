#pragma once

#include "valg/comm_alg.hpp"
#include "valg/leibniz.hpp"
#include "valg/report.hpp"
#include "valg/subspace.hpp"

#include <vector>

namespace valg {

/// Vertex A-algebroid (A, Gamma, ., [,], pi, <,>, d) by structure constants.
struct VertexAlgebroid {
  CommAlg a;
  std::size_t gdim = 0;
  Trilinear mact;     // A x Gamma -> Gamma, a.v
  Trilinear brk;      // Gamma x Gamma -> Gamma, [u,v] = u_0v
  Trilinear pair;     // Gamma x Gamma -> A, <u,v> = u_1v
  Trilinear act;      // Gamma x A -> A, pi(u)(a) = u_0a
  RatMatrix partial;  // gdim x a.dim

  std::size_t adim() const { return a.dim; }
  LeibnizAlg gamma() const { return {gdim, brk}; }

  Vec dot(const Vec& x, const Vec& v) const { return mact.apply(x, v); }
  Vec bracket(const Vec& u, const Vec& v) const { return brk.apply(u, v); }
  Vec pairing(const Vec& u, const Vec& v) const { return pair.apply(u, v); }
  Vec anchor(const Vec& u, const Vec& x) const { return act.apply(u, x); }
  Vec d(const Vec& x) const { return partial * x; }
};

/// Zero tables over a given algebra, except the unit law 1.v = v.
VertexAlgebroid make_vertex_algebroid(const CommAlg& a, std::size_t gdim);

/// Every defining identity and the equivalent conformal-algebra conditions on
/// all basis tuples, plus the unit law, pi o d = 0, pairing symmetry, the
/// Leibniz identity, pi a Leibniz homomorphism into Der(A), and the axioms of
/// A itself. Witness indices are in the order the operands appear in the id.
std::vector<AxiomViolation> check_vertex_algebroid(const VertexAlgebroid& b);

/// {u : <u,v> = 0 for all v}
Subspace rad_pairing(const VertexAlgebroid& b);
/// {u : u_0a = 0 for all a}
Subspace annihilator(const VertexAlgebroid& b);
/// span{a . d(a')}
Subspace a_partial_a(const VertexAlgebroid& b);
Subspace ker_partial(const VertexAlgebroid& b);
Subspace partial_image(const VertexAlgebroid& b);
/// {a : u_0a = 0 for all u}
Subspace joint_kernel_A0(const VertexAlgebroid& b);
/// Leib of the Leibniz algebra Gamma.
Subspace leib(const VertexAlgebroid& b);

/// Ideal of the vertex algebroid: a left Leibniz ideal closed under A.
bool is_algebroid_ideal(const VertexAlgebroid& b, const Subspace& s);
/// A . s inside s.
bool is_a_submodule(const VertexAlgebroid& b, const Subspace& s);

/// Containments and closure properties of rad, Ann, d(A), A d(A), Ker d and
/// the idempotents. Throws std::invalid_argument if b is not valid.
Report check_containments(const VertexAlgebroid& b);

/// Evaluates the hypotheses (Gamma simple, Leib != 0, Gamma != Ann) and, when
/// they hold, the conclusions Leib = d(A) = Ann, Leib an ideal, rad = 0.
Report verify_annba(const VertexAlgebroid& b);

/// With rad = 0, Ker d equals the joint kernel A0; otherwise only Ker d in A0.
Report verify_ker_eq_A0(const VertexAlgebroid& b);

}  // namespace valg
