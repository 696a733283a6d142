#include "valg/lie_algebroid.hpp"

#include "valg/leibniz.hpp"

#include <stdexcept>

namespace valg {

std::vector<AxiomViolation> check_lie_algebroid(const LieAlgebroid& l) {
  const std::size_t n = l.a.dim, g = l.ldim;
  using D = std::array<std::size_t, 3>;
  if (l.lie.dims() != D{g, g, g} || l.amod.dims() != D{n, g, g} || l.anchor.dims() != D{g, n, n}) {
    throw std::invalid_argument("check_lie_algebroid: table shapes do not match");
  }
  std::vector<AxiomViolation> out = check_comm_assoc(l.a);
  auto eg = [g](std::size_t i) { return unit_vec(g, i); };
  auto ea = [n](std::size_t i) { return unit_vec(n, i); };
  for (std::size_t u = 0; u < g; ++u)
    for (std::size_t v = u; v < g; ++v) {
      Vec s = l.lie.basis_product(u, v) + l.lie.basis_product(v, u);
      if (!is_zero(s)) out.push_back({"lie.antisymmetric", {u, v}, s, zero_vec(g)});
    }
  for (auto& v : check_left_leibniz(LeibnizAlg{g, l.lie})) {
    v.axiom_id = "lie.jacobi";
    out.push_back(std::move(v));
  }
  for (std::size_t v = 0; v < g; ++v) {
    Vec lhs = l.amod.apply(l.a.unit, eg(v));
    if (lhs != eg(v)) out.push_back({"lie.A-unit", {v}, lhs, eg(v)});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t v = 0; v < g; ++v) {
        Vec lhs = l.amod.apply(l.a.mul.basis_product(x, y), eg(v));
        Vec rhs = l.amod.apply(ea(x), l.amod.basis_product(y, v));
        if (lhs != rhs) out.push_back({"lie.A-module", {x, y, v}, lhs, rhs});
      }
  for (std::size_t u = 0; u < g; ++u) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Vec lhs = l.anchor.apply(eg(u), l.a.mul.basis_product(x, y));
        Vec rhs = l.a.multiply(l.anchor.basis_product(u, x), ea(y)) + l.a.multiply(ea(x), l.anchor.basis_product(u, y));
        if (lhs != rhs) out.push_back({"lie.anchor-derivation", {u, x, y}, lhs, rhs});
      }
    for (std::size_t v = 0; v < g; ++v)
      for (std::size_t x = 0; x < n; ++x) {
        Vec lhs = l.anchor.apply(l.lie.basis_product(u, v), ea(x));
        Vec rhs = l.anchor.apply(eg(u), l.anchor.basis_product(v, x)) - l.anchor.apply(eg(v), l.anchor.basis_product(u, x));
        if (lhs != rhs) out.push_back({"lie.anchor-hom", {u, v, x}, lhs, rhs});
        // [u, a v] = a [u,v] + (u a) v
        lhs = l.lie.apply(eg(u), l.amod.basis_product(x, v));
        rhs = l.amod.apply(ea(x), l.lie.basis_product(u, v)) + l.amod.apply(l.anchor.basis_product(u, x), eg(v));
        if (lhs != rhs) out.push_back({"lie.bracket-A", {u, x, v}, lhs, rhs});
      }
  }
  // a (u b) = (a u) b
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t u = 0; u < g; ++u)
      for (std::size_t y = 0; y < n; ++y) {
        Vec lhs = l.a.multiply(ea(x), l.anchor.basis_product(u, y));
        Vec rhs = l.anchor.apply(l.amod.basis_product(x, u), ea(y));
        if (lhs != rhs) out.push_back({"lie.anchor-A-linear", {x, u, y}, lhs, rhs});
      }
  return out;
}

std::vector<AxiomViolation> check_algebroid_module(const AlgebroidModule& m) {
  const LieAlgebroid& l = m.algd;
  const std::size_t n = l.a.dim, g = l.ldim, d = m.dim;
  using D = std::array<std::size_t, 3>;
  if (m.gact.dims() != D{g, d, d} || m.aact.dims() != D{n, d, d}) {
    throw std::invalid_argument("check_algebroid_module: table shapes do not match");
  }
  std::vector<AxiomViolation> out;
  auto ew = [d](std::size_t i) { return unit_vec(d, i); };
  auto ea = [n](std::size_t i) { return unit_vec(n, i); };
  for (std::size_t u = 0; u < g; ++u)
    for (std::size_t v = 0; v < g; ++v)
      for (std::size_t w = 0; w < d; ++w) {
        Vec lhs = m.gact.apply(l.lie.basis_product(u, v), ew(w));
        Vec rhs = m.gact.apply(unit_vec(g, u), m.gact.basis_product(v, w)) -
                  m.gact.apply(unit_vec(g, v), m.gact.basis_product(u, w));
        if (lhs != rhs) out.push_back({"module.g-module", {u, v, w}, lhs, rhs});
      }
  for (std::size_t w = 0; w < d; ++w) {
    Vec lhs = m.aact.apply(l.a.unit, ew(w));
    if (lhs != ew(w)) out.push_back({"module.A-unit", {w}, lhs, ew(w)});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t w = 0; w < d; ++w) {
        Vec lhs = m.aact.apply(l.a.mul.basis_product(x, y), ew(w));
        Vec rhs = m.aact.apply(ea(x), m.aact.basis_product(y, w));
        if (lhs != rhs) out.push_back({"module.A-module", {x, y, w}, lhs, rhs});
      }
  for (std::size_t u = 0; u < g; ++u)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t w = 0; w < d; ++w) {
        // u(aw) - a(uw) = (ua)w
        Vec lhs = m.gact.apply(unit_vec(g, u), m.aact.basis_product(x, w)) - m.aact.apply(ea(x), m.gact.basis_product(u, w));
        Vec rhs = m.aact.apply(l.anchor.basis_product(u, x), ew(w));
        if (lhs != rhs) out.push_back({"module.leibniz-rule", {u, x, w}, lhs, rhs});
        // a(uw) = (au)w
        lhs = m.aact.apply(ea(x), m.gact.basis_product(u, w));
        rhs = m.gact.apply(l.amod.basis_product(x, u), ew(w));
        if (lhs != rhs) out.push_back({"module.A-linear", {x, u, w}, lhs, rhs});
      }
  return out;
}

QuotientAlgebroid quotient_lie_algebroid(const VertexAlgebroid& b, QuotientBy which) {
  if (!check_vertex_algebroid(b).empty()) throw std::invalid_argument("quotient_lie_algebroid: not a vertex algebroid");
  Subspace ideal = which == QuotientBy::Ann ? annihilator(b) : a_partial_a(b);
  const char* name = which == QuotientBy::Ann ? "Ann" : "A d(A)";
  if (!is_leibniz_ideal(b.gamma(), ideal, Side::two_sided)) {
    throw std::invalid_argument(std::string("quotient_lie_algebroid: ") + name + " is not a two-sided ideal");
  }
  if (!is_a_submodule(b, ideal)) throw std::invalid_argument(std::string("quotient_lie_algebroid: ") + name + " is not an A-submodule");
  if (!annihilator(b).contains(ideal)) {
    throw std::invalid_argument(std::string("quotient_lie_algebroid: ") + name + " does not annihilate A");
  }
  const std::size_t n = b.adim();
  auto cols = ideal.complement_columns();
  const std::size_t q = cols.size();
  LieAlgebroid l{b.a, q, Trilinear(q, q, q), Trilinear(n, q, q), Trilinear(q, n, n)};
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      Vec c = ideal.quotient_coords(b.brk.basis_product(cols[i], cols[j]));
      for (std::size_t k = 0; k < q; ++k) l.lie.at(i, j, k) = c[k];
    }
    for (std::size_t x = 0; x < n; ++x) {
      Vec c = ideal.quotient_coords(b.mact.basis_product(x, cols[i]));
      for (std::size_t k = 0; k < q; ++k) l.amod.at(x, i, k) = c[k];
      for (std::size_t y = 0; y < n; ++y) l.anchor.at(i, x, y) = b.act.at(cols[i], x, y);
    }
  }
  AlgebroidModule on_a{l, n, l.anchor, b.a.mul};
  return {std::move(ideal), std::move(l), std::move(on_a)};
}

std::vector<RatMatrix> module_operators(const AlgebroidModule& m) {
  std::vector<RatMatrix> ops;
  for (std::size_t u = 0; u < m.algd.ldim; ++u) ops.push_back(m.gact.left_operator(u));
  for (std::size_t x = 0; x < m.algd.a.dim; ++x) ops.push_back(m.aact.left_operator(x));
  return ops;
}

SimplicityResult module_simple_over_C(const AlgebroidModule& m) {
  SimplicityResult res;
  const std::size_t d = m.dim;
  if (d == 0) return res;
  std::vector<RatMatrix> ops = module_operators(m);
  res.envelope_dim = envelope(ops, d).dim();
  res.simple = res.envelope_dim == d * d;
  if (res.simple) return res;

  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < d; ++i) candidates.push_back(unit_vec(d, i));
  for (const auto& op : ops) {
    auto roots = rational_roots(char_poly(op));
    std::vector<Rat> eigen{Rat(0)};
    if (roots) eigen.insert(eigen.end(), roots->begin(), roots->end());
    for (const Rat& lambda : eigen) {
      for (auto& v : kernel_basis(op - lambda * RatMatrix::identity(d))) candidates.push_back(std::move(v));
    }
  }
  for (const auto& c : candidates) {
    Subspace s = spin(d, std::span<const Vec>(&c, 1), ops);
    if (s.is_zero() || s.is_full()) continue;
    if (!res.witness || s.dim() < res.witness->dim()) res.witness = std::move(s);
  }
  return res;
}

}  // namespace valg
