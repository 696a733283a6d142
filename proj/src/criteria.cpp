#include "valg/criteria.hpp"

#include "valg/leibniz.hpp"
#include "valg/lie_algebroid.hpp"

#include <stdexcept>

namespace valg {

std::optional<Vec> nonzero_square(const LeibnizAlg& l) {
  for (std::size_t i = 0; i < l.dim; ++i) {
    if (!is_zero(l.bracket.basis_product(i, i))) return unit_vec(l.dim, i);
  }
  // All [b_i,b_i] vanish, so [b_i+b_j, b_i+b_j] = [b_i,b_j] + [b_j,b_i].
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = i + 1; j < l.dim; ++j)
      if (!is_zero(l.bracket.basis_product(i, j) + l.bracket.basis_product(j, i))) {
        return unit_vec(l.dim, i) + unit_vec(l.dim, j);
      }
  return std::nullopt;
}

namespace {

void not_simple_clause(Report& r, const std::string& id, const VertexAlgebroid& b, QuotientBy which) {
  try {
    QuotientAlgebroid q = quotient_lie_algebroid(b, which);
    SimplicityResult s = module_simple_over_C(q.on_a);
    // J(A) is the canonical witness when it is a proper invariant subspace.
    Subspace jac = jacobson_radical(b.a);
    if (!s.simple && !jac.is_zero() && !jac.is_full()) {
      bool invariant = true;
      for (const auto& op : module_operators(q.on_a))
        for (const auto& v : jac.basis_vectors()) invariant = invariant && jac.contains(op * v);
      if (invariant) s.witness = jac;
    }
    std::string detail = "envelope dim " + std::to_string(s.envelope_dim) + " of " + std::to_string(b.adim() * b.adim());
    if (s.witness) detail += "; invariant subspace " + to_string(*s.witness);
    r.add(id, !s.simple, detail);
  } catch (const std::invalid_argument& e) {
    r.add(id, false, e.what());
  }
}

std::string levi_clause(const VertexAlgebroid& b, const std::optional<LeviTriple>& levi) {
  if (!levi) return "no Levi candidate supplied";
  const auto& [e, f, h] = *levi;
  for (const Vec* v : {&e, &f, &h})
    if (v->size() != b.gdim) return "Levi vectors have the wrong length";
  Subspace s = Subspace::span(b.gdim, {e, f, h});
  if (s.dim() != 3) return "e, f, h are linearly dependent";
  if (!verify_levi(b.gamma(), s)) return "span{e,f,h} is not a Levi factor";
  if (b.bracket(e, f) != h) return "e_0f != h";
  if (b.bracket(h, e) != Rat(2) * e) return "h_0e != 2e";
  if (b.bracket(h, f) != Rat(-2) * f) return "h_0f != -2f";
  Vec ef = b.pairing(e, f);
  Subspace unit_line = Subspace::span(b.adim(), {b.a.unit});
  if (!unit_line.contains(ef)) return "e_1f is not a multiple of 1";
  if (is_zero(ef)) return "e_1f = 0";
  return {};
}

}  // namespace

CriteriaVerdict criteria_engine(const VertexAlgebroid& b, const std::optional<LeviTriple>& levi) {
  if (!check_vertex_algebroid(b).empty()) throw std::invalid_argument("criteria_engine: not a vertex algebroid");
  CriteriaVerdict v;
  Report& r = v.clauses;
  const LeibnizAlg g = b.gamma();

  bool dims = b.adim() >= 2 && b.gdim >= 1;
  r.add("Thm 1.1(a)", dims,
        "dim A = " + std::to_string(b.adim()) + ", dim Gamma = " + std::to_string(b.gdim) +
            "; generation by degrees 0 and 1 assumed");
  r.add("Thm 1.1(b)", is_local_over_C(b.a), "dim A/J = " + std::to_string(b.adim() - jacobson_radical(b.a).dim()));
  Subspace rad = rad_pairing(b);
  r.add("Thm 1.1(i)", !rad.is_zero(), "rad = " + to_string(rad) + " (the ideal it generates contains it)");
  not_simple_clause(r, "Thm 1.1(ii)", b, QuotientBy::Ann);
  not_simple_clause(r, "Thm 1.1(iii)", b, QuotientBy::APartialA);

  r.add("Thm 1.2(a)", dims, "same as Thm 1.1(a)");
  bool acts = !annihilator(b).is_full();
  auto sq = nonzero_square(g);
  r.add("Thm 1.2(b)", acts && sq.has_value(),
        std::string(acts ? "A is a nontrivial module" : "A is a trivial module") +
            (sq ? "; u_0u != 0 at u = " + to_string(*sq) : "; u_0u = 0 for all u"));
  std::string levi_problem = levi_clause(b, levi);
  r.add("Thm 1.2(c)", levi_problem.empty(), levi_problem.empty() ? "Levi factor sl2 with e_1f = k1, k != 0" : levi_problem);
  r.add("Thm 1.2(i)", is_simple(g), "Gamma simple Leibniz algebra");
  bool semisimple = is_semisimple(g);
  bool ker_a0 = ker_partial(b) == joint_kernel_A0(b);
  r.add("Thm 1.2(ii)", semisimple && ker_a0,
        std::string(semisimple ? "semisimple" : "not semisimple") + (ker_a0 ? ", Ker d = A0" : ", Ker d != A0"));

  auto ok = [&](const char* id) { return r.find(id)->status == Status::pass; };
  bool base11 = ok("Thm 1.1(a)") && ok("Thm 1.1(b)");
  bool base12 = ok("Thm 1.2(a)") && ok("Thm 1.2(b)") && ok("Thm 1.2(c)");
  const char* order[] = {"Thm 1.2(i)", "Thm 1.2(ii)", "Thm 1.1(i)", "Thm 1.1(ii)", "Thm 1.1(iii)"};
  for (const char* id : order) {
    bool base = std::string(id).rfind("Thm 1.2", 0) == 0 ? base12 : base11;
    if (base && ok(id)) v.conclusions.push_back(std::string("IndecomposableNonSimple via ") + id);
  }
  if (!v.conclusions.empty()) {
    v.verdict = v.conclusions.front();
  } else if (!dims) {
    v.verdict = "NoVerdict: clause (a) fails";
  } else {
    std::vector<std::string> failed;
    for (const auto& c : r.checks)
      if (c.status != Status::pass) failed.push_back(c.id);
    std::string list;
    for (std::size_t i = 0; i < failed.size(); ++i) list += (i ? ", " : "") + failed[i];
    v.verdict = "NoVerdict: failing clauses " + list;
  }
  return v;
}

}  // namespace valg
