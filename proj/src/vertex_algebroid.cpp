#include "valg/vertex_algebroid.hpp"

#include <stdexcept>

namespace valg {

VertexAlgebroid make_vertex_algebroid(const CommAlg& a, std::size_t gdim) {
  VertexAlgebroid b{a,
                    gdim,
                    Trilinear(a.dim, gdim, gdim),
                    Trilinear(gdim, gdim, gdim),
                    Trilinear(gdim, gdim, a.dim),
                    Trilinear(gdim, a.dim, a.dim),
                    RatMatrix(gdim, a.dim)};
  for (std::size_t x = 0; x < a.dim; ++x) {
    if (a.unit[x] == 0) continue;
    for (std::size_t v = 0; v < gdim; ++v) b.mact.at(x, v, v) += a.unit[x];
  }
  return b;
}

namespace {

void check_shapes(const VertexAlgebroid& b) {
  const std::size_t n = b.adim(), g = b.gdim;
  using D = std::array<std::size_t, 3>;
  if (b.a.unit.size() != n || b.a.mul.dims() != D{n, n, n} || b.mact.dims() != D{n, g, g} ||
      b.brk.dims() != D{g, g, g} || b.pair.dims() != D{g, g, n} || b.act.dims() != D{g, n, n} ||
      b.partial.rows() != g || b.partial.cols() != n) {
    throw std::invalid_argument("vertex algebroid: table shapes do not match (dim A, dim Gamma)");
  }
}

using Body = std::function<void(std::size_t, std::vector<AxiomViolation>&)>;

void run(std::vector<AxiomViolation>& out, std::size_t n, const Body& body) {
  auto part = collect_ordered(n, body);
  out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
}

}  // namespace

std::vector<AxiomViolation> check_vertex_algebroid(const VertexAlgebroid& b) {
  check_shapes(b);
  const std::size_t n = b.adim(), g = b.gdim;
  const CommAlg& A = b.a;
  std::vector<Vec> ea(n), eg(g), da(n);
  for (std::size_t i = 0; i < n; ++i) ea[i] = unit_vec(n, i);
  for (std::size_t i = 0; i < g; ++i) eg[i] = unit_vec(g, i);
  for (std::size_t i = 0; i < n; ++i) da[i] = b.partial.column(i);
  auto pi = [&](std::size_t u, const Vec& x) { return b.act.apply(eg[u], x); };

  std::vector<AxiomViolation> out = check_comm_assoc(A);

  for (std::size_t v = 0; v < g; ++v) {
    Vec lhs = b.dot(A.unit, eg[v]);
    if (lhs != eg[v]) out.push_back({"valg.unit", {v}, lhs, eg[v]});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vec lhs = b.act.apply(da[x], ea[y]);
      if (!is_zero(lhs)) out.push_back({"valg.pi-partial", {x, y}, lhs, zero_vec(n)});
    }
  for (std::size_t u = 0; u < g; ++u)
    for (std::size_t v = u + 1; v < g; ++v) {
      Vec lhs = b.pair.basis_product(u, v), rhs = b.pair.basis_product(v, u);
      if (lhs != rhs) out.push_back({"valg.pair-symmetric", {u, v}, lhs, rhs});
    }
  for (auto& v : check_left_leibniz(b.gamma())) {
    v.axiom_id = "valg.leibniz";
    out.push_back(std::move(v));
  }

  // pi(u) is a derivation of A
  run(out, g, [&](std::size_t u, std::vector<AxiomViolation>& sink) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Vec lhs = pi(u, A.mul.basis_product(x, y));
        Vec rhs = A.multiply(ea[x], b.act.basis_product(u, y)) + A.multiply(b.act.basis_product(u, x), ea[y]);
        if (lhs != rhs) sink.push_back({"valg.pi-derivation", {u, x, y}, lhs, rhs});
      }
  });
  // pi([u,v]) = [pi(u), pi(v)]
  run(out, g, [&](std::size_t u, std::vector<AxiomViolation>& sink) {
    for (std::size_t v = 0; v < g; ++v)
      for (std::size_t x = 0; x < n; ++x) {
        Vec lhs = b.anchor(b.brk.basis_product(u, v), ea[x]);
        Vec rhs = pi(u, b.act.basis_product(v, x)) - pi(v, b.act.basis_product(u, x));
        if (lhs != rhs) sink.push_back({"valg.pi-hom", {u, v, x}, lhs, rhs});
      }
  });
  // a.(a'.v) - (a*a').v = pi(v)(a).d(a') + pi(v)(a').d(a)
  run(out, n, [&](std::size_t x, std::vector<AxiomViolation>& sink) {
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t v = 0; v < g; ++v) {
        Vec lhs = b.dot(ea[x], b.mact.basis_product(y, v)) - b.dot(A.mul.basis_product(x, y), eg[v]);
        Vec rhs = b.dot(b.act.basis_product(v, x), da[y]) + b.dot(b.act.basis_product(v, y), da[x]);
        if (lhs != rhs) sink.push_back({"valg.nonassoc-module", {x, y, v}, lhs, rhs});
      }
  });
  // [u, a.v] = pi(u)(a).v + a.[u,v]
  run(out, g, [&](std::size_t u, std::vector<AxiomViolation>& sink) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t v = 0; v < g; ++v) {
        Vec lhs = b.bracket(eg[u], b.mact.basis_product(x, v));
        Vec rhs = b.dot(b.act.basis_product(u, x), eg[v]) + b.dot(ea[x], b.brk.basis_product(u, v));
        if (lhs != rhs) sink.push_back({"valg.bracket-module", {u, x, v}, lhs, rhs});
      }
  });
  for (std::size_t u = 0; u < g; ++u)
    for (std::size_t v = 0; v < g; ++v) {
      Vec lhs = b.brk.basis_product(u, v) + b.brk.basis_product(v, u);
      Vec rhs = b.d(b.pair.basis_product(u, v));
      if (lhs != rhs) out.push_back({"valg.symmetrized-bracket", {u, v}, lhs, rhs});
    }
  // pi(a.v) = a pi(v)
  run(out, n, [&](std::size_t x, std::vector<AxiomViolation>& sink) {
    for (std::size_t v = 0; v < g; ++v)
      for (std::size_t y = 0; y < n; ++y) {
        Vec lhs = b.anchor(b.mact.basis_product(x, v), ea[y]);
        Vec rhs = A.multiply(ea[x], b.act.basis_product(v, y));
        if (lhs != rhs) sink.push_back({"valg.pi-A-linear", {x, v, y}, lhs, rhs});
      }
  });
  // <a.u, v> = a*<u,v> - pi(u)(pi(v)(a))
  run(out, n, [&](std::size_t x, std::vector<AxiomViolation>& sink) {
    for (std::size_t u = 0; u < g; ++u)
      for (std::size_t v = 0; v < g; ++v) {
        Vec lhs = b.pairing(b.mact.basis_product(x, u), eg[v]);
        Vec rhs = A.multiply(ea[x], b.pair.basis_product(u, v)) - pi(u, b.act.basis_product(v, x));
        if (lhs != rhs) sink.push_back({"valg.pair-module", {x, u, v}, lhs, rhs});
      }
  });
  // pi(v)<v1,v2> = <[v,v1],v2> + <v1,[v,v2]>
  run(out, g, [&](std::size_t v, std::vector<AxiomViolation>& sink) {
    for (std::size_t v1 = 0; v1 < g; ++v1)
      for (std::size_t v2 = 0; v2 < g; ++v2) {
        Vec lhs = pi(v, b.pair.basis_product(v1, v2));
        Vec rhs = b.pairing(b.brk.basis_product(v, v1), eg[v2]) + b.pairing(eg[v1], b.brk.basis_product(v, v2));
        if (lhs != rhs) sink.push_back({"valg.pair-invariant", {v, v1, v2}, lhs, rhs});
      }
  });
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vec lhs = b.d(A.mul.basis_product(x, y));
      Vec rhs = b.dot(ea[x], da[y]) + b.dot(ea[y], da[x]);
      if (lhs != rhs) out.push_back({"valg.partial-derivation", {x, y}, lhs, rhs});
    }
  for (std::size_t v = 0; v < g; ++v)
    for (std::size_t x = 0; x < n; ++x) {
      Vec lhs = b.bracket(eg[v], da[x]);
      Vec rhs = b.d(b.act.basis_product(v, x));
      if (lhs != rhs) out.push_back({"valg.bracket-partial", {v, x}, lhs, rhs});
      lhs = b.pairing(eg[v], da[x]);
      rhs = b.act.basis_product(v, x);
      if (lhs != rhs) out.push_back({"valg.pair-partial", {v, x}, lhs, rhs});
    }
  // Conformal-algebra form a_0(a'.v) = a'*(a_0v) with a_0w = -pi(w)(a).
  run(out, n, [&](std::size_t x, std::vector<AxiomViolation>& sink) {
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t v = 0; v < g; ++v) {
        Vec lhs = -b.anchor(b.mact.basis_product(y, v), ea[x]);
        Vec rhs = A.multiply(ea[y], -b.act.basis_product(v, x));
        if (lhs != rhs) sink.push_back({"valg.conformal.a0-module", {x, y, v}, lhs, rhs});
      }
  });
  return out;
}

namespace {

// Joint kernel of the maps x -> t(x, b_j) over all j (left = true) or of
// y -> t(b_i, y) over all i (left = false).
Subspace joint_kernel(const Trilinear& t, bool left) {
  const std::size_t cols = left ? t.d_left() : t.d_right();
  const std::size_t other = left ? t.d_right() : t.d_left();
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < other; ++j)
    for (std::size_t k = 0; k < t.d_out(); ++k) {
      Vec r(cols);
      for (std::size_t i = 0; i < cols; ++i) r[i] = left ? t.at(i, j, k) : t.at(j, i, k);
      if (!is_zero(r)) rows.push_back(std::move(r));
    }
  if (rows.empty()) return Subspace::full(cols);
  return kernel(RatMatrix::from_rows(rows, cols));
}

void require_valid(const VertexAlgebroid& b, const char* who) {
  if (!check_vertex_algebroid(b).empty()) throw std::invalid_argument(std::string(who) + ": not a vertex algebroid");
}

}  // namespace

Subspace rad_pairing(const VertexAlgebroid& b) { return joint_kernel(b.pair, true); }
Subspace annihilator(const VertexAlgebroid& b) { return joint_kernel(b.act, true); }
Subspace joint_kernel_A0(const VertexAlgebroid& b) { return joint_kernel(b.act, false); }

Subspace a_partial_a(const VertexAlgebroid& b) {
  std::vector<Vec> gens;
  for (std::size_t x = 0; x < b.adim(); ++x)
    for (std::size_t y = 0; y < b.adim(); ++y) gens.push_back(b.dot(unit_vec(b.adim(), x), b.partial.column(y)));
  return Subspace::span(b.gdim, gens);
}

Subspace ker_partial(const VertexAlgebroid& b) { return kernel(b.partial); }
Subspace partial_image(const VertexAlgebroid& b) { return column_space(b.partial); }
Subspace leib(const VertexAlgebroid& b) { return leib_ideal(b.gamma()); }

bool is_a_submodule(const VertexAlgebroid& b, const Subspace& s) {
  for (std::size_t x = 0; x < b.adim(); ++x)
    for (const auto& v : s.basis_vectors())
      if (!s.contains(b.dot(unit_vec(b.adim(), x), v))) return false;
  return true;
}

bool is_algebroid_ideal(const VertexAlgebroid& b, const Subspace& s) {
  return is_leibniz_ideal(b.gamma(), s, Side::left) && is_a_submodule(b, s);
}

Report check_containments(const VertexAlgebroid& b) {
  require_valid(b, "check_containments");
  const LeibnizAlg g = b.gamma();
  const Subspace rad = rad_pairing(b), ann = annihilator(b), dA = partial_image(b), apa = a_partial_a(b);
  const Subspace lb = leib(b), ker = ker_partial(b), a0 = joint_kernel_A0(b);
  Report r;

  r.add("Prop-radann-i.rad-two-sided-ideal", is_leibniz_ideal(g, rad, Side::two_sided));
  bool rad_lie = true;
  for (const auto& x : rad.basis_vectors())
    for (const auto& y : rad.basis_vectors()) rad_lie = rad_lie && is_zero(g(x, y) + g(y, x));
  r.add("Prop-radann-i.rad-lie", rad_lie);
  r.add("Prop-radann-ii.ann-two-sided-ideal", is_leibniz_ideal(g, ann, Side::two_sided));
  r.add("Prop-radann-ii.rad-in-ann", ann.contains(rad));
  r.add("Prop-radann-ii.leib-in-dA", dA.contains(lb));
  r.add("Prop-radann-ii.dA-in-ann", ann.contains(dA));
  r.add("Prop-radann-iii.ann-algebroid-ideal", is_algebroid_ideal(b, ann));
  r.add("Prop-radann-iv.rad-algebroid-ideal", is_algebroid_ideal(b, rad));
  r.add("Ex-ApA.two-sided-ideal", is_leibniz_ideal(g, apa, Side::two_sided));
  r.add("Ex-ApA.algebroid-ideal", is_algebroid_ideal(b, apa));
  r.add("Cor-radann.ApA-in-ann", ann.contains(apa));

  bool closed = ker.contains(b.a.unit);
  for (const auto& x : ker.basis_vectors())
    for (const auto& y : ker.basis_vectors()) closed = closed && ker.contains(b.a.multiply(x, y));
  r.add("Prop-ker-i.subalgebra", closed);
  r.add("Prop-ker-ii.trivial-action", a0.contains(ker));
  bool gamma_module = true, da_module = true;
  for (const auto& x : ker.basis_vectors()) {
    for (const auto& y : ker.basis_vectors())
      for (std::size_t v = 0; v < b.gdim; ++v) {
        Vec ev = unit_vec(b.gdim, v);
        gamma_module = gamma_module && b.dot(x, b.dot(y, ev)) == b.dot(b.a.multiply(x, y), ev);
      }
    for (const auto& w : dA.basis_vectors()) da_module = da_module && dA.contains(b.dot(x, w));
  }
  r.add("Prop-ker-iii.gamma-module", gamma_module);
  r.add("Prop-ker-iii.dA-module", da_module);
  r.add("Prop-ker-iv.unit-in-ker", ker.contains(b.a.unit));
  IdempotentReport idem = idempotents_in(b.a, ker);
  Status st = idem.verdict == Tri::yes ? Status::pass : idem.verdict == Tri::no ? Status::fail : Status::undetermined;
  r.add("Prop-ker-iv.idempotents", st, idem.escaping ? "escaping idempotent " + to_string(*idem.escaping) : "");
  return r;
}

Report verify_annba(const VertexAlgebroid& b) {
  require_valid(b, "verify_annba");
  const Subspace ann = annihilator(b), lb = leib(b), dA = partial_image(b);
  Report r;
  bool simple = is_simple(b.gamma());
  bool nonzero = !lb.is_zero();
  bool proper = !ann.is_full();
  r.add("Lemma-annba.hyp.gamma-simple", simple);
  r.add("Lemma-annba.hyp.leib-nonzero", nonzero);
  r.add("Lemma-annba.hyp.gamma-ne-ann", proper);
  if (!(simple && nonzero && proper)) {
    r.add("Lemma-annba.conclusions", Status::undetermined, "hypotheses not met; nothing asserted");
    return r;
  }
  r.add("Lemma-annba.leib=dA", lb == dA);
  r.add("Lemma-annba.dA=ann", dA == ann);
  r.add("Lemma-annba.leib-algebroid-ideal", is_algebroid_ideal(b, lb));
  r.add("Lemma-annba.rad=0", rad_pairing(b).is_zero());
  return r;
}

Report verify_ker_eq_A0(const VertexAlgebroid& b) {
  require_valid(b, "verify_ker_eq_A0");
  const Subspace ker = ker_partial(b), a0 = joint_kernel_A0(b);
  Report r;
  bool rad_zero = rad_pairing(b).is_zero();
  r.add("Thm-kerA0.hyp.rad=0", rad_zero);
  r.add("Thm-kerA0.ker-in-A0", a0.contains(ker));
  if (rad_zero) {
    r.add("Thm-kerA0.ker=A0", ker == a0, "Ker d = " + to_string(ker) + ", A0 = " + to_string(a0));
  } else {
    r.add("Thm-kerA0.ker=A0", Status::undetermined, "rad != 0; equality not asserted");
  }
  return r;
}

}  // namespace valg
