#include "valg/leibniz.hpp"

#include <stdexcept>

namespace valg {

std::vector<AxiomViolation> check_left_leibniz(const LeibnizAlg& l) {
  const std::size_t n = l.dim;
  if (l.bracket.dims() != std::array<std::size_t, 3>{n, n, n}) {
    throw std::invalid_argument("check_left_leibniz: bracket shape does not match dim");
  }
  return collect_ordered(n, [&](std::size_t a, std::vector<AxiomViolation>& out) {
    const Vec ea = unit_vec(n, a);
    for (std::size_t b = 0; b < n; ++b) {
      const Vec eb = unit_vec(n, b);
      const Vec ab = l.bracket.basis_product(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        const Vec ec = unit_vec(n, c);
        Vec lhs = l(ea, l.bracket.basis_product(b, c));
        Vec rhs = l(ab, ec) + l(eb, l.bracket.basis_product(a, c));
        if (lhs != rhs) out.push_back({"leibniz.left_identity", {a, b, c}, lhs, rhs});
      }
    }
  });
}

std::vector<AxiomViolation> check_module(const LeibnizModule& m) {
  const std::size_t n = m.alg.dim;
  if (m.action.dims() != std::array<std::size_t, 3>{n, m.dim, m.dim}) {
    throw std::invalid_argument("check_module: action shape mismatch");
  }
  std::vector<AxiomViolation> out;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      RatMatrix lhs_op = m.action.left_operator(m.alg.bracket.basis_product(u, v));
      RatMatrix rhs_op = m.op(u) * m.op(v) - m.op(v) * m.op(u);
      for (std::size_t w = 0; w < m.dim; ++w) {
        Vec lhs = lhs_op.column(w);
        Vec rhs = rhs_op.column(w);
        if (lhs != rhs) out.push_back({"leibniz.module", {u, v, w}, lhs, rhs});
      }
    }
  }
  return out;
}

bool is_lie(const LeibnizAlg& l) {
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = i; j < l.dim; ++j)
      if (!is_zero(l.bracket.basis_product(i, j) + l.bracket.basis_product(j, i))) return false;
  return true;
}

Subspace product_space(const LeibnizAlg& l, const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != l.dim || w.ambient_dim() != l.dim) throw std::invalid_argument("product_space: dimension mismatch");
  std::vector<Vec> out;
  for (const auto& x : u.basis_vectors())
    for (const auto& y : w.basis_vectors()) out.push_back(l(x, y));
  return Subspace::span(l.dim, out);
}

Subspace leib_ideal(const LeibnizAlg& l) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = i; j < l.dim; ++j) out.push_back(l.bracket.basis_product(i, j) + l.bracket.basis_product(j, i));
  return Subspace::span(l.dim, out);
}

std::vector<Subspace> derived_series(const LeibnizAlg& l, const Subspace& s) {
  std::vector<Subspace> series{s};
  for (std::size_t step = 0; step <= l.dim + 1; ++step) {
    const Subspace& last = series.back();
    if (last.is_zero()) return series;
    Subspace next = product_space(l, last, last);
    bool stable = next == last;
    series.push_back(std::move(next));
    if (stable) return series;
  }
  throw std::logic_error("derived_series: no stabilization within dim + 1 steps");
}

std::vector<Subspace> derived_series(const LeibnizAlg& l) { return derived_series(l, Subspace::full(l.dim)); }

bool is_solvable(const LeibnizAlg& l) { return derived_series(l).back().is_zero(); }

LeibnizAlg quotient(const LeibnizAlg& l, const Subspace& ideal) {
  if (!is_leibniz_ideal(l, ideal, Side::two_sided)) throw std::invalid_argument("quotient: subspace is not a two-sided ideal");
  auto cols = ideal.complement_columns();
  const std::size_t q = cols.size();
  LeibnizAlg out{q, Trilinear(q, q, q)};
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      Vec c = ideal.quotient_coords(l.bracket.basis_product(cols[i], cols[j]));
      for (std::size_t k = 0; k < q; ++k) out.bracket.at(i, j, k) = c[k];
    }
  }
  return out;
}

RatMatrix killing_form(const LeibnizAlg& l) {
  std::vector<RatMatrix> ad;
  for (std::size_t i = 0; i < l.dim; ++i) ad.push_back(l.ad(i));
  RatMatrix k(l.dim, l.dim);
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = 0; j < l.dim; ++j) k(i, j) = (ad[i] * ad[j]).trace();
  return k;
}

Subspace radical(const LeibnizAlg& l) {
  Subspace leib = leib_ideal(l);
  LeibnizAlg g = quotient(l, leib);
  RatMatrix kf = killing_form(g);
  Subspace derived = product_space(g, Subspace::full(g.dim), Subspace::full(g.dim));
  std::vector<Vec> rows;
  for (const auto& d : derived.basis_vectors()) rows.push_back(kf * d);
  Subspace rad_bar = rows.empty() ? Subspace::full(g.dim) : kernel(RatMatrix::from_rows(rows, g.dim));
  std::vector<Vec> gens = leib.basis_vectors();
  for (const auto& x : rad_bar.basis_vectors()) gens.push_back(leib.lift(x));
  return Subspace::span(l.dim, gens);
}

bool is_semisimple(const LeibnizAlg& l) { return radical(l) == leib_ideal(l); }

bool is_simple_lie(const LeibnizAlg& g) {
  if (g.dim == 0 || !is_lie(g)) return false;
  if (product_space(g, Subspace::full(g.dim), Subspace::full(g.dim)).is_zero()) return false;
  if (rank(killing_form(g)) != g.dim) return false;
  std::vector<RatMatrix> ad;
  for (std::size_t i = 0; i < g.dim; ++i) ad.push_back(g.ad(i));
  return envelope(ad, g.dim).dim() == g.dim * g.dim;
}

std::vector<RatMatrix> restrict_operators(std::span<const RatMatrix> ops, const Subspace& s) {
  const std::size_t d = s.dim();
  auto basis = s.basis_vectors();
  std::vector<RatMatrix> out;
  for (const auto& op : ops) {
    RatMatrix r(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec w = op * basis[j];
      if (!s.contains(w)) throw std::invalid_argument("restrict_operators: subspace is not invariant");
      for (std::size_t k = 0; k < d; ++k) r(k, j) = w[s.pivots()[k]];
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool is_simple(const LeibnizAlg& l) {
  Subspace leib = leib_ideal(l);
  if (leib.is_zero()) return is_simple_lie(l);
  if (!is_simple_lie(quotient(l, leib))) return false;
  std::vector<RatMatrix> ad;
  for (std::size_t i = 0; i < l.dim; ++i) ad.push_back(l.ad(i));
  auto on_leib = restrict_operators(ad, leib);
  bool nontrivial = false;
  for (const auto& op : on_leib) nontrivial = nontrivial || !op.is_zero();
  if (!nontrivial) return false;
  if (envelope(on_leib, leib.dim()).dim() != leib.dim() * leib.dim()) return false;
  Subspace full = Subspace::full(l.dim);
  return !(product_space(l, full, full) == leib);
}

bool verify_levi(const LeibnizAlg& l, const Subspace& s) {
  if (s.ambient_dim() != l.dim) throw std::invalid_argument("verify_levi: dimension mismatch");
  if (!s.contains(product_space(l, s, s))) return false;
  auto basis = s.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (!is_zero(l(basis[i], basis[j]) + l(basis[j], basis[i]))) return false;
  Subspace rad = radical(l);
  return subspace_intersect(s, rad).is_zero() && subspace_sum(s, rad).is_full();
}

bool is_leibniz_ideal(const LeibnizAlg& l, const Subspace& s, Side side) {
  if (s.ambient_dim() != l.dim) throw std::invalid_argument("is_leibniz_ideal: dimension mismatch");
  Subspace full = Subspace::full(l.dim);
  if (side != Side::right && !s.contains(product_space(l, full, s))) return false;
  if (side != Side::left && !s.contains(product_space(l, s, full))) return false;
  return true;
}

LeibnizAlg build_hemisemidirect(const LeibnizAlg& g, const LeibnizModule& m) {
  if (!is_lie(g) || !check_left_leibniz(g).empty()) throw std::invalid_argument("build_hemisemidirect: g is not a Lie algebra");
  if (!(m.alg.bracket == g.bracket) || !check_module(m).empty()) {
    throw std::invalid_argument("build_hemisemidirect: invalid module");
  }
  const std::size_t n = g.dim + m.dim;
  LeibnizAlg out{n, Trilinear(n, n, n)};
  for (std::size_t i = 0; i < g.dim; ++i) {
    for (std::size_t j = 0; j < g.dim; ++j)
      for (std::size_t k = 0; k < g.dim; ++k) out.bracket.at(i, j, k) = g.bracket.at(i, j, k);
    for (std::size_t j = 0; j < m.dim; ++j)
      for (std::size_t k = 0; k < m.dim; ++k) out.bracket.at(i, g.dim + j, g.dim + k) = m.action.at(i, j, k);
  }
  return out;
}

LeibnizAlg sl2() {
  LeibnizAlg g{3, Trilinear(3, 3, 3)};
  constexpr std::size_t e = 0, f = 1, h = 2;
  g.bracket.at(e, f, h) = 1;
  g.bracket.at(f, e, h) = -1;
  g.bracket.at(h, e, e) = 2;
  g.bracket.at(e, h, e) = -2;
  g.bracket.at(h, f, f) = -2;
  g.bracket.at(f, h, f) = 2;
  return g;
}

LeibnizModule sl2_module(long m) {
  if (m < 0) throw std::invalid_argument("sl2_module: highest weight must be non-negative");
  const auto dim = static_cast<std::size_t>(m) + 1;
  LeibnizModule mod{sl2(), dim, Trilinear(3, dim, dim)};
  for (std::size_t i = 0; i < dim; ++i) {
    const long il = static_cast<long>(i);
    mod.action.at(2, i, i) = m - 2 * il;
    if (i + 1 < dim) mod.action.at(1, i, i + 1) = il + 1;
    if (i > 0) mod.action.at(0, i, i - 1) = m - il + 1;
  }
  return mod;
}

LeibnizModule direct_sum(const LeibnizModule& a, const LeibnizModule& b) {
  if (!(a.alg.bracket == b.alg.bracket)) throw std::invalid_argument("direct_sum: modules over different algebras");
  const std::size_t n = a.alg.dim;
  const std::size_t d = a.dim + b.dim;
  LeibnizModule out{a.alg, d, Trilinear(n, d, d)};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) out.action.at(u, j, k) = a.action.at(u, j, k);
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k) out.action.at(u, a.dim + j, a.dim + k) = b.action.at(u, j, k);
  }
  return out;
}

}  // namespace valg
