#pragma once

#include "valg/comm_alg.hpp"
#include "valg/report.hpp"
#include "valg/subspace.hpp"
#include "valg/vertex_algebroid.hpp"

#include <optional>
#include <vector>

namespace valg {

/// Lie algebra g that is an A-module and acts on A by derivations, with
/// [u, a v] = a [u,v] + (u a) v and a (u b) = (a u) b.
struct LieAlgebroid {
  CommAlg a;
  std::size_t ldim = 0;
  Trilinear lie;     // g x g -> g
  Trilinear amod;    // A x g -> g
  Trilinear anchor;  // g x A -> A
};

/// Module W over a Lie algebroid: u(aw) - a(uw) = (ua)w and a(uw) = (au)w,
/// besides the g-module and A-module laws.
struct AlgebroidModule {
  LieAlgebroid algd;
  std::size_t dim = 0;
  Trilinear gact;  // g x W -> W
  Trilinear aact;  // A x W -> W
};

std::vector<AxiomViolation> check_lie_algebroid(const LieAlgebroid& l);
std::vector<AxiomViolation> check_algebroid_module(const AlgebroidModule& m);

enum class QuotientBy { Ann, APartialA };

struct QuotientAlgebroid {
  Subspace ideal;         // inside Gamma
  LieAlgebroid algd;      // Gamma / ideal on the complement-of-pivots basis
  AlgebroidModule on_a;   // A with gact = anchor and aact = *
};

/// Quotient of Gamma by Ann or by A d(A). The ideal conditions (two-sided
/// Leibniz ideal, A-submodule, contained in Ann) are verified; failure throws
/// std::invalid_argument, as does an invalid b.
QuotientAlgebroid quotient_lie_algebroid(const VertexAlgebroid& b, QuotientBy which);

struct SimplicityResult {
  bool simple = false;
  std::size_t envelope_dim = 0;
  /// Proper nonzero invariant subspace, when one was found over Q.
  std::optional<Subspace> witness;
};

/// Simple over C iff the operators of g and A generate the full matrix
/// algebra. If not, spins candidate vectors (standard basis, kernels and
/// rational eigenvectors of every operator) for the smallest proper
/// invariant subspace among them.
SimplicityResult module_simple_over_C(const AlgebroidModule& m);

/// Operator matrices of a module: every gact operator, then every aact one.
std::vector<RatMatrix> module_operators(const AlgebroidModule& m);

}  // namespace valg
