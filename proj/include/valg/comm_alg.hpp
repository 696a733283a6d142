#pragma once

#include "valg/report.hpp"
#include "valg/subspace.hpp"
#include "valg/trilinear.hpp"

#include <optional>
#include <vector>

namespace valg {

/// Unital commutative associative algebra by structure constants.
struct CommAlg {
  std::size_t dim = 0;
  Vec unit;
  Trilinear mul;  // dim x dim -> dim

  Vec multiply(const Vec& x, const Vec& y) const { return mul.apply(x, y); }
  /// Matrix of y -> x * y.
  RatMatrix left_mult(const Vec& x) const { return mul.left_operator(x); }
  RatMatrix left_mult(std::size_t i) const { return mul.left_operator(i); }
};

/// Algebra of dimension n with the given unit index and all other products
/// zero except unit * b = b * unit = b.
CommAlg make_comm_alg(std::size_t dim, std::size_t unit_index = 0);

/// Commutativity, associativity and the unit law on all basis tuples.
std::vector<AxiomViolation> check_comm_assoc(const CommAlg& a);

/// Radical of the trace form tr(L_x L_y); for a finite-dimensional
/// commutative algebra in characteristic zero this is the nilradical.
/// Throws std::invalid_argument if a fails check_comm_assoc.
Subspace jacobson_radical(const CommAlg& a);

/// Local over C: the semisimple quotient A/J is one-dimensional.
bool is_local_over_C(const CommAlg& a);

bool is_assoc_ideal(const CommAlg& a, const Subspace& s);

enum class Tri { yes, no, undetermined };

struct IdempotentReport {
  Tri verdict = Tri::undetermined;
  /// Primitive idempotents of A, when they could be found over Q.
  std::vector<Vec> primitive;
  /// An idempotent outside s, when verdict is no.
  std::optional<Vec> escaping;
};

/// Does s contain every idempotent of a? Local algebras have only 0 and 1.
/// Otherwise the primitive idempotents are found by splitting A/J along the
/// rational eigenvalues of a generating element and lifting modulo J; if
/// that split is not available over Q the verdict is undetermined.
IdempotentReport idempotents_in(const CommAlg& a, const Subspace& s);

}  // namespace valg
