#include "valg/comm_alg.hpp"

#include <stdexcept>

namespace valg {

CommAlg make_comm_alg(std::size_t dim, std::size_t unit_index) {
  CommAlg a;
  a.dim = dim;
  a.unit = unit_vec(dim, unit_index);
  a.mul = Trilinear(dim, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    a.mul.at(unit_index, i, i) = 1;
    a.mul.at(i, unit_index, i) = 1;
  }
  return a;
}

std::vector<AxiomViolation> check_comm_assoc(const CommAlg& a) {
  std::vector<AxiomViolation> out;
  const std::size_t n = a.dim;
  if (a.unit.size() != n || a.mul.dims() != std::array<std::size_t, 3>{n, n, n}) {
    throw std::invalid_argument("check_comm_assoc: table shape does not match dim");
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec lhs = a.multiply(a.unit, unit_vec(n, i));
    Vec rhs = unit_vec(n, i);
    if (lhs != rhs) out.push_back({"calg.unit", {i}, lhs, rhs});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = a.mul.basis_product(i, j);
      Vec rhs = a.mul.basis_product(j, i);
      if (lhs != rhs) out.push_back({"calg.commutative", {i, j}, lhs, rhs});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = a.mul.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = a.multiply(ij, unit_vec(n, k));
        Vec rhs = a.multiply(unit_vec(n, i), a.mul.basis_product(j, k));
        if (lhs != rhs) out.push_back({"calg.associative", {i, j, k}, lhs, rhs});
      }
    }
  }
  return out;
}

namespace {

void require_valid(const CommAlg& a, const char* who) {
  if (!check_comm_assoc(a).empty()) {
    throw std::invalid_argument(std::string(who) + ": algebra is not unital commutative associative");
  }
}

}  // namespace

Subspace jacobson_radical(const CommAlg& a) {
  require_valid(a, "jacobson_radical");
  std::vector<RatMatrix> left;
  for (std::size_t i = 0; i < a.dim; ++i) left.push_back(a.left_mult(i));
  RatMatrix gram(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i; j < a.dim; ++j) gram(i, j) = gram(j, i) = (left[i] * left[j]).trace();
  return kernel(gram);
}

bool is_local_over_C(const CommAlg& a) { return a.dim - jacobson_radical(a).dim() == 1; }

bool is_assoc_ideal(const CommAlg& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim) throw std::invalid_argument("is_assoc_ideal: dimension mismatch");
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (const auto& v : s.basis_vectors()) {
      if (!s.contains(a.multiply(unit_vec(a.dim, i), v))) return false;
    }
  }
  return true;
}

namespace {

// Minimal polynomial of x modulo J, when x generates A/J (degree = dim A/J).
std::optional<std::vector<Rat>> generating_min_poly(const CommAlg& a, const Subspace& rad, const Vec& x,
                                                    std::size_t quotient_dim) {
  std::vector<Vec> powers{a.unit};
  std::vector<Vec> reduced{rad.quotient_coords(a.unit)};
  for (std::size_t d = 1; d <= quotient_dim; ++d) {
    powers.push_back(a.multiply(powers.back(), x));
    reduced.push_back(rad.quotient_coords(powers.back()));
    RatMatrix cols = RatMatrix::from_columns(std::vector<Vec>(reduced.begin(), reduced.end() - 1), quotient_dim);
    auto sol = solve_linear(cols, reduced.back());
    if (!sol) continue;
    if (d < quotient_dim) return std::nullopt;
    std::vector<Rat> poly(d + 1);
    for (std::size_t k = 0; k < d; ++k) poly[k] = -sol->particular[k];
    poly[d] = 1;
    return poly;
  }
  return std::nullopt;
}

Vec lift_idempotent(const CommAlg& a, Vec e) {
  for (std::size_t round = 0; round <= a.dim + 1; ++round) {
    Vec e2 = a.multiply(e, e);
    if (e2 == e) return e;
    Vec e3 = a.multiply(e2, e);
    e = Rat(3) * e2 - Rat(2) * e3;
  }
  throw std::logic_error("idempotent lifting did not converge");
}

}  // namespace

IdempotentReport idempotents_in(const CommAlg& a, const Subspace& s) {
  require_valid(a, "idempotents_in");
  if (s.ambient_dim() != a.dim) throw std::invalid_argument("idempotents_in: dimension mismatch");
  IdempotentReport rep;
  Subspace rad = jacobson_radical(a);
  const std::size_t r = a.dim - rad.dim();
  if (r == 1) {
    rep.primitive = {a.unit};
  } else {
    for (unsigned long t = 1; t <= 2 * a.dim + 2 && rep.primitive.empty(); ++t) {
      Vec x = zero_vec(a.dim);
      for (std::size_t i = 0; i < a.dim; ++i) {
        mpz_class c;
        mpz_ui_pow_ui(c.get_mpz_t(), i + 1, t);
        x[i] = Rat(c);
      }
      auto poly = generating_min_poly(a, rad, x, r);
      if (!poly) continue;
      auto roots = rational_roots(*poly);
      if (!roots || roots->size() != r) continue;
      for (std::size_t i = 0; i < r; ++i) {
        Vec e = a.unit;
        for (std::size_t j = 0; j < r; ++j) {
          if (j == i) continue;
          Vec factor = x - (*roots)[j] * a.unit;
          e = (1 / ((*roots)[i] - (*roots)[j])) * a.multiply(e, factor);
        }
        rep.primitive.push_back(lift_idempotent(a, e));
      }
    }
    if (rep.primitive.empty()) {
      rep.verdict = Tri::undetermined;
      return rep;
    }
  }
  rep.verdict = Tri::yes;
  for (const auto& e : rep.primitive) {
    if (!s.contains(e)) {
      rep.verdict = Tri::no;
      rep.escaping = e;
      break;
    }
  }
  return rep;
}

}  // namespace valg
