#include "valg/tca.hpp"

#include "valg/vertex_algebroid.hpp"

#include <stdexcept>

namespace valg {

namespace {

Vec head(const Vec& x, std::size_t n) { return Vec(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n)); }
Vec tail(const Vec& x, std::size_t n) { return Vec(x.begin() + static_cast<std::ptrdiff_t>(n), x.end()); }

Vec join(const Vec& c0, const Vec& c1) {
  Vec out = c0;
  out.insert(out.end(), c1.begin(), c1.end());
  return out;
}

void check_shapes(const TCA& c) {
  if (c.partial.rows() != c.d1 || c.partial.cols() != c.d0 ||
      c.act0.dims() != std::array<std::size_t, 3>{c.d1, c.d0, c.d0} ||
      c.brk0.dims() != std::array<std::size_t, 3>{c.d1, c.d1, c.d1} ||
      c.pair1.dims() != std::array<std::size_t, 3>{c.d1, c.d1, c.d0}) {
    throw std::invalid_argument("TCA: table shapes do not match (d0, d1)");
  }
}

}  // namespace

Vec TCA::product(int i, const Vec& x, const Vec& y) const {
  if (x.size() != total_dim() || y.size() != total_dim()) throw std::invalid_argument("TCA::product: length mismatch");
  Vec xa = head(x, d0), xu = tail(x, d0);
  Vec ya = head(y, d0), yu = tail(y, d0);
  if (i == 0) return join(act0.apply(xu, ya) - act0.apply(yu, xa), brk0.apply(xu, yu));
  if (i == 1) return join(pair1.apply(xu, yu), zero_vec(d1));
  throw std::invalid_argument("TCA::product: only the 0- and 1-products exist");
}

Vec TCA::d(const Vec& x) const { return join(zero_vec(d0), partial * head(x, d0)); }

TCA make_tca(std::size_t d0, std::size_t d1) {
  return TCA{d0, d1, RatMatrix(d1, d0), Trilinear(d1, d0, d0), Trilinear(d1, d1, d1), Trilinear(d1, d1, d0)};
}

std::vector<AxiomViolation> check_tca(const TCA& c) {
  check_shapes(c);
  const std::size_t n = c.total_dim();
  auto e = [n](std::size_t i) { return unit_vec(n, i); };
  std::vector<AxiomViolation> out;

  for (std::size_t a = 0; a < c.d0; ++a) {
    Vec da = c.d(e(a));
    for (std::size_t x = 0; x < n; ++x) {
      Vec lhs = c.product(0, da, e(x));
      if (!is_zero(lhs)) out.push_back({"tca.derivation.(da)_0=0", {a, x}, lhs, zero_vec(n)});
      lhs = c.product(1, da, e(x));
      Vec rhs = -c.product(0, e(a), e(x));
      if (lhs != rhs) out.push_back({"tca.derivation.(da)_1=-a_0", {a, x}, lhs, rhs});
    }
    for (std::size_t u = c.d0; u < n; ++u) {
      Vec lhs = c.d(c.product(0, e(u), e(a)));
      Vec rhs = c.product(0, e(u), da);
      if (lhs != rhs) out.push_back({"tca.derivation.d(u_0a)=u_0da", {u, a}, lhs, rhs});
    }
  }

  for (std::size_t u = c.d0; u < n; ++u) {
    for (std::size_t a = 0; a < c.d0; ++a) {
      Vec lhs = c.product(0, e(u), e(a));
      Vec rhs = -c.product(0, e(a), e(u));
      if (lhs != rhs) out.push_back({"tca.commutativity.u_0a=-a_0u", {u, a}, lhs, rhs});
    }
    for (std::size_t v = c.d0; v < n; ++v) {
      Vec lhs = c.product(0, e(u), e(v));
      Vec rhs = -c.product(0, e(v), e(u)) + c.d(c.product(1, e(u), e(v)));
      if (lhs != rhs) out.push_back({"tca.commutativity.u_0v=-v_0u+d(u_1v)", {u, v}, lhs, rhs});
      if (v > u) {
        lhs = c.product(1, e(u), e(v));
        rhs = c.product(1, e(v), e(u));
        if (lhs != rhs) out.push_back({"tca.commutativity.u_1v=v_1u", {u, v}, lhs, rhs});
      }
    }
  }

  for (int i = 0; i <= 1; ++i) {
    auto part = collect_ordered(n, [&](std::size_t al, std::vector<AxiomViolation>& sink) {
      for (std::size_t be = 0; be < n; ++be) {
        Vec ab = c.product(0, e(al), e(be));
        for (std::size_t ga = 0; ga < n; ++ga) {
          Vec lhs = c.product(0, e(al), c.product(i, e(be), e(ga)));
          Vec rhs = c.product(i, e(be), c.product(0, e(al), e(ga))) + c.product(i, ab, e(ga));
          if (lhs != rhs) {
            sink.push_back({i == 0 ? "tca.associativity.i=0" : "tca.associativity.i=1", {al, be, ga}, lhs, rhs});
          }
        }
      }
    });
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

std::string first_failure(const std::vector<AxiomViolation>& v) { return v.empty() ? "" : to_string(v.front()); }

}  // namespace

Report check_prop_C0C1(const TCA& c) {
  check_shapes(c);
  Report r;
  const std::size_t d0 = c.d0, d1 = c.d1;

  r.add("Prop-C0C1-i.leibniz", check_left_leibniz(LeibnizAlg{d1, c.brk0}).empty());

  std::vector<AxiomViolation> bad;
  for (std::size_t u = 0; u < d1; ++u)
    for (std::size_t v = 0; v < d1; ++v) {
      RatMatrix lhs = c.act0.left_operator(c.brk0.basis_product(u, v));
      RatMatrix rhs = c.act0.left_operator(u) * c.act0.left_operator(v) - c.act0.left_operator(v) * c.act0.left_operator(u);
      if (lhs != rhs) bad.push_back({"module", {u, v}, lhs.entries(), rhs.entries()});
    }
  r.add("Prop-C0C1-i.C0-module", bad.empty(), first_failure(bad));

  bad.clear();
  for (std::size_t u = 0; u < d1; ++u) {
    RatMatrix lhs = c.partial * c.act0.left_operator(u);
    RatMatrix rhs = c.brk0.left_operator(u) * c.partial;
    if (lhs != rhs) bad.push_back({"partial-hom", {u}, lhs.entries(), rhs.entries()});
  }
  r.add("Prop-C0C1-ii.partial-hom", bad.empty(), first_failure(bad));

  bad.clear();
  for (std::size_t a = 0; a < d0; ++a) {
    Vec da = c.partial.column(a);
    if (!c.brk0.left_operator(da).is_zero() || !c.act0.left_operator(da).is_zero()) bad.push_back({"annihilate", {a}, da, {}});
  }
  r.add("Prop-C0C1-ii.partial-annihilates", bad.empty(), first_failure(bad));

  bad.clear();
  for (std::size_t u = 0; u < d1; ++u)
    for (std::size_t v = 0; v < d1; ++v)
      for (std::size_t w = 0; w < d1; ++w) {
        Vec lhs = c.act0.apply(unit_vec(d1, u), c.pair1.basis_product(v, w));
        Vec rhs = c.pair1.apply(c.brk0.basis_product(u, v), unit_vec(d1, w)) +
                  c.pair1.apply(unit_vec(d1, v), c.brk0.basis_product(u, w));
        if (lhs != rhs) bad.push_back({"pairing-hom", {u, v, w}, lhs, rhs});
      }
  r.add("Prop-C0C1-iii.pairing-hom", bad.empty(), first_failure(bad));

  // a_0u is defined as -u_0a, so this identity is structural; it is still
  // evaluated through the whole-space product.
  bad.clear();
  for (std::size_t u = 0; u < d1; ++u)
    for (std::size_t a = 0; a < d0; ++a) {
      Vec lhs = c.product(0, unit_vec(d0 + d1, d0 + u), unit_vec(d0 + d1, a));
      Vec rhs = -c.product(0, unit_vec(d0 + d1, a), unit_vec(d0 + d1, d0 + u));
      if (lhs != rhs) bad.push_back({"u0a", {u, a}, lhs, rhs});
    }
  r.add("Prop-C0C1-iii.u0a=-a0u", bad.empty(), first_failure(bad));

  bad.clear();
  for (std::size_t a = 0; a < d0; ++a)
    for (std::size_t u = 0; u < d1; ++u) {
      Vec lhs = c.pair1.apply(c.partial.column(a), unit_vec(d1, u));
      Vec rhs = c.act0.basis_product(u, a);
      if (lhs != rhs) bad.push_back({"pair-partial", {a, u}, lhs, rhs});
    }
  r.add("Prop-C0C1-iii.pair-partial", bad.empty(), first_failure(bad));

  bad.clear();
  for (std::size_t u = 0; u < d1; ++u)
    for (std::size_t v = 0; v < d1; ++v) {
      Vec lhs = c.brk0.basis_product(u, v) + c.brk0.basis_product(v, u);
      Vec rhs = c.partial * c.pair1.basis_product(u, v);
      if (lhs != rhs) bad.push_back({"symmetrized-bracket", {u, v}, lhs, rhs});
    }
  r.add("Prop-C0C1-iii.symmetrized-bracket", bad.empty(), first_failure(bad));

  bad.clear();
  for (std::size_t u = 0; u < d1; ++u)
    for (std::size_t v = u + 1; v < d1; ++v) {
      Vec lhs = c.pair1.basis_product(u, v);
      Vec rhs = c.pair1.basis_product(v, u);
      if (lhs != rhs) bad.push_back({"pair-symmetric", {u, v}, lhs, rhs});
    }
  r.add("Prop-C0C1-iii.pair-symmetric", bad.empty(), first_failure(bad));
  return r;
}

TCA tca_from_lie_pair(const LeibnizAlg& g, const Trilinear& form, const LeibnizModule& m, const LeibnizModule& a_m,
                      const RatMatrix& phi) {
  const std::size_t n = g.dim;
  if (!is_lie(g) || !check_left_leibniz(g).empty()) throw std::invalid_argument("tca_from_lie_pair: g is not a Lie algebra");
  if (form.dims() != std::array<std::size_t, 3>{n, n, 1}) throw std::invalid_argument("tca_from_lie_pair: form shape");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (form.at(x, y, 0) != form.at(y, x, 0)) throw std::invalid_argument("tca_from_lie_pair: form is not symmetric");
      for (std::size_t z = 0; z < n; ++z) {
        Vec lhs = form.apply(g.bracket.basis_product(x, y), unit_vec(n, z));
        Vec rhs = form.apply(unit_vec(n, x), g.bracket.basis_product(y, z));
        if (lhs != rhs) throw std::invalid_argument("tca_from_lie_pair: form is not invariant");
      }
    }
  for (const LeibnizModule* mod : {&m, &a_m}) {
    if (!(mod->alg.bracket == g.bracket) || !check_module(*mod).empty()) {
      throw std::invalid_argument("tca_from_lie_pair: invalid g-module");
    }
  }
  if (phi.rows() != m.dim || phi.cols() != a_m.dim) throw std::invalid_argument("tca_from_lie_pair: phi shape");
  auto phi_inv = inverse(phi);
  if (!phi_inv) throw std::invalid_argument("tca_from_lie_pair: phi is not bijective");
  for (std::size_t x = 0; x < n; ++x) {
    if (phi * a_m.op(x) != m.op(x) * phi) throw std::invalid_argument("tca_from_lie_pair: phi is not equivariant");
  }

  const std::size_t dm = m.dim, da = a_m.dim;
  TCA c = make_tca(1 + da, n + dm);
  for (std::size_t j = 0; j < da; ++j)
    for (std::size_t k = 0; k < dm; ++k) c.partial(n + k, 1 + j) = phi(k, j);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) c.brk0.at(x, y, z) = g.bracket.at(x, y, z);
      c.pair1.at(x, y, 0) = form.at(x, y, 0);
    }
    for (std::size_t j = 0; j < dm; ++j)
      for (std::size_t k = 0; k < dm; ++k) c.brk0.at(x, n + j, n + k) = m.action.at(x, j, k);
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) c.act0.at(x, 1 + j, 1 + k) = a_m.action.at(x, j, k);
    // g_1 m = m_1 g = g . phi^{-1}(m)
    for (std::size_t j = 0; j < dm; ++j) {
      Vec pre = phi_inv->column(j);
      Vec val = a_m.op(x) * pre;
      for (std::size_t k = 0; k < da; ++k) {
        c.pair1.at(x, n + j, 1 + k) = val[k];
        c.pair1.at(n + j, x, 1 + k) = val[k];
      }
    }
  }
  return c;
}

TCA tca_of_vertex_algebroid(const VertexAlgebroid& b) {
  if (!check_vertex_algebroid(b).empty()) throw std::invalid_argument("tca_of_vertex_algebroid: not a vertex algebroid");
  return TCA{b.a.dim, b.gdim, b.partial, b.act, b.brk, b.pair};
}

}  // namespace valg
