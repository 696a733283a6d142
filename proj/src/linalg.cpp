#include "valg/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace valg {

RrefResult rref(const RatMatrix& m) {
  RrefResult out{m, 0, {}};
  RatMatrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const RatMatrix& m) {
  auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(const RatMatrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: right-hand side length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == a.cols()) return std::nullopt;
  LinearSolution sol;
  sol.particular = zero_vec(a.cols());
  for (std::size_t i = 0; i < red.rank; ++i) sol.particular[red.pivots[i]] = red.reduced(i, a.cols());
  sol.kernel = kernel_basis(a);
  return sol;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return RatMatrix(0, 0);
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.reduced(i, n + j);
  return inv;
}

std::vector<Rat> char_poly(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  // c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  RatMatrix mk(n, n);
  const RatMatrix id = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    c[n - k] = -(m * mk).trace() / Rat(static_cast<long>(k));
  }
  return c;
}

Rat poly_eval(const std::vector<Rat>& poly, const Rat& t) {
  Rat acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * t + *it;
  return acc;
}

namespace {

constexpr unsigned long kDivisorBound = 1000000000000UL;

std::optional<std::vector<mpz_class>> positive_divisors(const mpz_class& v) {
  mpz_class a = abs(v);
  if (a > mpz_class(std::to_string(kDivisorBound))) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::optional<std::vector<Rat>> rational_roots(const std::vector<Rat>& poly) {
  std::size_t deg = poly.size();
  while (deg > 0 && poly[deg - 1] == 0) --deg;
  if (deg == 0) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::set<Rat> roots;
  std::size_t low = 0;
  while (poly[low] == 0) ++low;
  if (low > 0) roots.insert(Rat(0));
  if (deg - 1 > low) {
    mpz_class lcm = 1;
    for (std::size_t i = low; i < deg; ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), poly[i].get_den_mpz_t());
    mpz_class c0 = poly[low].get_num() * (lcm / poly[low].get_den());
    mpz_class cn = poly[deg - 1].get_num() * (lcm / poly[deg - 1].get_den());
    auto ps = positive_divisors(c0);
    auto qs = positive_divisors(cn);
    if (!ps || !qs) return std::nullopt;
    for (const auto& p : *ps) {
      for (const auto& q : *qs) {
        for (int sign : {1, -1}) {
          Rat cand(mpz_class(sign * p), q);
          cand.canonicalize();
          if (poly_eval(poly, cand) == 0) roots.insert(cand);
        }
      }
    }
  }
  return std::vector<Rat>(roots.begin(), roots.end());
}

}  // namespace valg
