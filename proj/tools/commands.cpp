#include "commands.hpp"

#include "valg/criteria.hpp"
#include "valg/fixture.hpp"
#include "valg/sl2_family.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace valg::cli {

using nlohmann::json;

namespace {

// Linear combination in terms of basis labels, or raw coordinates.
std::string format_vec(const Vec& v, const std::vector<std::string>* labels) {
  if (!labels || labels->size() != v.size()) return to_string(v);
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rat c = v[i];
    if (!s.empty()) {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    if (c != 1) s += to_string(c) + " ";
    s += (*labels)[i];
  }
  return s.empty() ? "0" : s;
}

std::string format_subspace(const Subspace& s, const std::vector<std::string>* labels) {
  if (s.is_zero()) return "0";
  std::string out = "span{";
  auto rows = s.basis_vectors();
  for (std::size_t i = 0; i < rows.size(); ++i) out += (i ? ", " : "") + format_vec(rows[i], labels);
  return out + "} (dim " + std::to_string(s.dim()) + ")";
}

const std::vector<std::string>* labels_of(const Fixture& f, const char* space) {
  auto it = f.labels.find(space);
  return it == f.labels.end() ? nullptr : &it->second;
}

json witness_json(const AxiomViolation& v) {
  json w = json::array();
  for (auto i : v.witness) w.push_back(i);
  return w;
}

void print_report_text(const Report& r, std::ostream& out) {
  for (const auto& c : r.checks) {
    out << to_string(c.status) << "  " << c.id;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"id", c.id}, {"pass", c.status == Status::pass}};
    if (c.status == Status::undetermined) e["undetermined"] = true;
    if (!c.detail.empty()) e["witness"] = c.detail;
    checks.push_back(std::move(e));
  }
  return checks;
}

std::optional<Fixture> load(const std::filesystem::path& path, Streams io) {
  try {
    return load_fixture(path);
  } catch (const FixtureError& e) {
    io.err << "error: " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

std::vector<AxiomViolation> violations_of(const Fixture& f) {
  return std::visit(
      [](const auto& x) -> std::vector<AxiomViolation> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CommAlg>) return check_comm_assoc(x);
        else if constexpr (std::is_same_v<T, LeibnizAlg>) return check_left_leibniz(x);
        else if constexpr (std::is_same_v<T, TCA>) return check_tca(x);
        else return check_vertex_algebroid(x);
      },
      f.object);
}

Fixture family_fixture(long l) {
  FamilySpec spec{static_cast<std::size_t>(l), FamilyVariant::semisimple};
  Fixture f;
  f.name = "sl2-family-l" + std::to_string(l);
  f.object = build_sl2_algebroid(spec);
  FamilyLabels labels = family_labels(spec);
  f.labels["A"] = labels.a;
  f.labels["Gamma"] = labels.gamma;
  auto levi = family_levi(spec);
  f.subspaces["levi"] = {levi[0], levi[1], levi[2]};
  return f;
}

}  // namespace

int cmd_check(const std::filesystem::path& path, const std::optional<std::string>& kind, bool as_json, Streams io) {
  auto f = load(path, io);
  if (!f) return usage;
  if (kind && *kind != f->kind()) {
    io.err << "error: " << path.string() << " has kind " << f->kind() << ", expected " << *kind << "\n";
    return usage;
  }
  std::vector<AxiomViolation> bad;
  Report prop;
  try {
    bad = violations_of(*f);
    if (auto* c = std::get_if<TCA>(&f->object)) prop = check_prop_C0C1(*c);
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return usage;
  }
  bool clean = bad.empty() && prop.all_pass();
  if (as_json) {
    json checks = json::array();
    if (bad.empty()) checks.push_back({{"id", f->kind() + ".axioms"}, {"pass", true}});
    for (const auto& v : bad) checks.push_back({{"id", v.axiom_id}, {"pass", false}, {"witness", witness_json(v)}});
    for (auto& c : report_json(prop)) checks.push_back(c);
    io.out << json{{"fixture", f->name}, {"checks", checks}, {"verdict", clean ? "OK" : "FAIL"}}.dump(2) << "\n";
  } else {
    io.out << "fixture " << f->name << " (" << f->kind() << ")\n";
    for (const auto& v : bad) io.out << "VIOLATION " << to_string(v) << "\n";
    print_report_text(prop, io.out);
    io.out << (clean ? "OK" : "FAIL") << ": " << bad.size() << " violation(s)\n";
  }
  return clean ? ok : violations;
}

int cmd_invariants(const std::filesystem::path& path, bool as_json, Streams io) {
  auto f = load(path, io);
  if (!f) return usage;
  auto* b = std::get_if<VertexAlgebroid>(&f->object);
  if (!b) {
    io.err << "error: invariants needs a vertex_algebroid fixture, got " << f->kind() << "\n";
    return usage;
  }
  auto bad = check_vertex_algebroid(*b);
  if (!bad.empty()) {
    for (const auto& v : bad) io.err << "VIOLATION " << to_string(v) << "\n";
    io.err << "not a vertex algebroid: " << bad.size() << " violation(s)\n";
    return violations;
  }
  const auto* la = labels_of(*f, "A");
  const auto* lg = labels_of(*f, "Gamma");
  const Subspace lb = leib(*b), rad = rad_pairing(*b), ann = annihilator(*b), dA = partial_image(*b);
  const Subspace apa = a_partial_a(*b), ker = ker_partial(*b), a0 = joint_kernel_A0(*b), jac = jacobson_radical(b->a);
  const bool local = is_local_over_C(b->a);
  Report contain = check_containments(*b);
  contain.append(verify_annba(*b));
  contain.append(verify_ker_eq_A0(*b));

  if (as_json) {
    auto sub = [](const Subspace& s) {
      json rows = json::array();
      for (const auto& v : s.basis_vectors()) {
        json row = json::array();
        for (const auto& x : v) row.push_back(to_string(x));
        rows.push_back(row);
      }
      return rows;
    };
    json inv{{"leib", sub(lb)}, {"rad", sub(rad)}, {"ann", sub(ann)},    {"dA", sub(dA)},
             {"ApA", sub(apa)}, {"ker", sub(ker)}, {"A0", sub(a0)},      {"jacobson", sub(jac)},
             {"local", local}};
    io.out << json{{"fixture", f->name}, {"invariants", inv}, {"checks", report_json(contain)}}.dump(2) << "\n";
    return ok;
  }
  io.out << "fixture " << f->name << ": dim A = " << b->adim() << ", dim Gamma = " << b->gdim << "\n";
  io.out << "Leib  = " << format_subspace(lb, lg) << "\n";
  io.out << "rad   = " << format_subspace(rad, lg) << "\n";
  io.out << "Ann   = " << format_subspace(ann, lg) << "\n";
  io.out << "dA    = " << format_subspace(dA, lg) << "\n";
  io.out << "AdA   = " << format_subspace(apa, lg) << "\n";
  io.out << "Ker d = " << format_subspace(ker, la) << "\n";
  io.out << "A0    = " << format_subspace(a0, la) << "\n";
  io.out << "J(A)  = " << format_subspace(jac, la) << "\n";
  io.out << "A local: " << (local ? "yes" : "no") << "\n";
  if (ker.is_full()) io.out << "Ker d = A\n";
  if (ann == dA && dA == lb) io.out << "Ann = dA = Leib (dim " << lb.dim() << ")\n";
  print_report_text(contain, io.out);
  return ok;
}

int cmd_family_emit(long l, const std::optional<std::filesystem::path>& out_path, Streams io) {
  if (l < 1) {
    io.err << "error: --l must be at least 1\n";
    return usage;
  }
  std::string text = emit_fixture(family_fixture(l));
  if (!out_path) {
    io.out << text;
    return ok;
  }
  std::ofstream file(*out_path, std::ios::binary);
  if (!file || !(file << text)) {
    io.err << "error: cannot write " << out_path->string() << "\n";
    return usage;
  }
  return ok;
}

int cmd_family_verify(long l, bool as_json, Streams io) {
  if (l < 1) {
    io.err << "error: --l must be at least 1\n";
    return usage;
  }
  Report r = verify_family_theorems({static_cast<std::size_t>(l), FamilyVariant::semisimple});
  if (as_json) {
    io.out << json{{"fixture", "sl2-family-l" + std::to_string(l)}, {"checks", report_json(r)}}.dump(2) << "\n";
  } else {
    print_report_text(r, io.out);
    io.out << (r.all_pass() ? "all " + std::to_string(r.checks.size()) + " checks pass" : "some checks FAIL") << "\n";
  }
  return r.all_pass() ? ok : violations;
}

namespace {

std::optional<LeviTriple> parse_levi(const std::string& text, const Fixture& f, std::size_t gdim, Streams io) {
  std::vector<Vec> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
      return s;
    };
    row = trim(row);
    if (auto idx = label_index(f, "Gamma", row)) {
      rows.push_back(unit_vec(gdim, *idx));
      continue;
    }
    Vec v;
    std::stringstream rs(row);
    std::string cell;
    try {
      while (std::getline(rs, cell, ',')) v.push_back(parse_rat(trim(cell)));
    } catch (const std::invalid_argument& e) {
      io.err << "error: --levi row \"" << row << "\" is neither a label nor rationals\n";
      return std::nullopt;
    }
    if (v.size() != gdim) {
      io.err << "error: --levi row \"" << row << "\" has " << v.size() << " entries, expected " << gdim << "\n";
      return std::nullopt;
    }
    rows.push_back(std::move(v));
  }
  if (rows.size() != 3) {
    io.err << "error: --levi needs exactly three rows (e; f; h)\n";
    return std::nullopt;
  }
  return LeviTriple{rows[0], rows[1], rows[2]};
}

}  // namespace

int cmd_criteria(const std::filesystem::path& path, const std::optional<std::string>& levi, bool as_json, Streams io) {
  auto f = load(path, io);
  if (!f) return usage;
  auto* b = std::get_if<VertexAlgebroid>(&f->object);
  if (!b) {
    io.err << "error: criteria needs a vertex_algebroid fixture, got " << f->kind() << "\n";
    return usage;
  }
  std::optional<LeviTriple> triple;
  if (levi) {
    triple = parse_levi(*levi, *f, b->gdim, io);
    if (!triple) return usage;
  } else if (auto it = f->subspaces.find("levi"); it != f->subspaces.end() && it->second.size() == 3) {
    triple = LeviTriple{it->second[0], it->second[1], it->second[2]};
  }
  auto bad = check_vertex_algebroid(*b);
  if (!bad.empty()) {
    for (const auto& v : bad) io.err << "VIOLATION " << to_string(v) << "\n";
    io.err << "not a vertex algebroid: " << bad.size() << " violation(s)\n";
    return violations;
  }
  CriteriaVerdict v = criteria_engine(*b, triple);
  if (as_json) {
    io.out << json{{"fixture", f->name}, {"checks", report_json(v.clauses)}, {"verdict", v.verdict}, {"conclusions", v.conclusions}}
                  .dump(2)
           << "\n";
  } else {
    print_report_text(v.clauses, io.out);
    for (const auto& c : v.conclusions) io.out << "conclusion: " << c << "\n";
    io.out << "verdict: " << v.verdict << "\n";
  }
  return ok;
}

int cmd_probe(const std::string& variant, Streams io) {
  ProbeVariant pv;
  if (variant == "unit") pv = ProbeVariant::unit;
  else if (variant == "nil") pv = ProbeVariant::nil;
  else if (variant == "reference") pv = ProbeVariant::reference;
  else {
    io.err << "error: --variant must be unit, nil or reference\n";
    return usage;
  }
  ProbeResult r = probe_dim1_extension(pv);
  for (const auto& line : r.trace) io.out << line << "\n";
  return ok;
}

}  // namespace valg::cli
