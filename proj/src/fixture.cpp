#include "valg/fixture.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace valg {

using nlohmann::json;

namespace {

struct KindInfo {
  const char* kind;
  std::vector<const char*> dims;
  bool has_unit;
};

const KindInfo& info_for(const std::string& kind) {
  static const std::vector<KindInfo> kinds = {
      {"comm_alg", {"A"}, true},
      {"leibniz", {"L"}, false},
      {"tca", {"C0", "C1"}, false},
      {"vertex_algebroid", {"A", "Gamma"}, true},
  };
  for (const auto& k : kinds)
    if (kind == k.kind) return k;
  throw FixtureError("unknown kind \"" + kind + "\"");
}

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw FixtureError(where + ": " + what); }

std::size_t read_index(const json& v, std::size_t bound, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(where, "expected a non-negative integer index");
  auto i = v.get<unsigned long long>();
  if (i >= bound) fail(where, "index " + std::to_string(i) + " out of range (< " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(i);
}

Rat read_rat(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(mpz_class(std::to_string(v.get<long long>())));
  if (!v.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return parse_rat(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

// Sparse entries [i, j, k, v] into a table of the given shape.
Trilinear read_trilinear(const json& tables, const char* name, std::array<std::size_t, 3> dims) {
  const std::string where = std::string("tables.") + name;
  const json& list = member(tables, name, "tables");
  if (!list.is_array()) fail(where, "expected an array of entries");
  Trilinear t(dims[0], dims[1], dims[2]);
  std::vector<bool> seen(dims[0] * dims[1] * dims[2], false);
  for (std::size_t n = 0; n < list.size(); ++n) {
    const std::string w = where + "[" + std::to_string(n) + "]";
    const json& e = list[n];
    if (!e.is_array() || e.size() != 4) fail(w, "expected [i, j, k, \"p/q\"]");
    std::size_t i = read_index(e[0], dims[0], w), j = read_index(e[1], dims[1], w), k = read_index(e[2], dims[2], w);
    std::size_t flat = (i * dims[1] + j) * dims[2] + k;
    if (seen[flat]) fail(w, "duplicate entry");
    seen[flat] = true;
    t.at(i, j, k) = read_rat(e[3], w);
  }
  return t;
}

// Entries [source, target, v] of a map from a space of dimension src.
RatMatrix read_partial(const json& tables, std::size_t src, std::size_t tgt) {
  const json& list = member(tables, "partial", "tables");
  if (!list.is_array()) fail("tables.partial", "expected an array of entries");
  RatMatrix m(tgt, src);
  std::vector<bool> seen(src * tgt, false);
  for (std::size_t n = 0; n < list.size(); ++n) {
    const std::string w = "tables.partial[" + std::to_string(n) + "]";
    const json& e = list[n];
    if (!e.is_array() || e.size() != 3) fail(w, "expected [source, target, \"p/q\"]");
    std::size_t s = read_index(e[0], src, w), t = read_index(e[1], tgt, w);
    if (seen[s * tgt + t]) fail(w, "duplicate entry");
    seen[s * tgt + t] = true;
    m(t, s) = read_rat(e[2], w);
  }
  return m;
}

Vec read_unit(const json& j, std::size_t dim) {
  const json& list = member(j, "unit", "fixture");
  if (!list.is_array()) fail("unit", "expected an array of [index, \"p/q\"]");
  Vec u = zero_vec(dim);
  std::vector<bool> seen(dim, false);
  for (std::size_t n = 0; n < list.size(); ++n) {
    const std::string w = "unit[" + std::to_string(n) + "]";
    const json& e = list[n];
    if (!e.is_array() || e.size() != 2) fail(w, "expected [index, \"p/q\"]");
    std::size_t i = read_index(e[0], dim, w);
    if (seen[i]) fail(w, "duplicate entry");
    seen[i] = true;
    u[i] = read_rat(e[1], w);
  }
  return u;
}

void check_table_names(const json& tables, const std::vector<const char*>& allowed) {
  if (!tables.is_object()) fail("tables", "expected an object");
  for (auto it = tables.begin(); it != tables.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) fail("tables", "unknown table \"" + it.key() + "\"");
  }
}

std::string q(const std::string& s) { return json(s).dump(); }

void emit_trilinear(std::ostringstream& os, const char* name, const Trilinear& t, bool last) {
  os << "    " << q(name) << ": [";
  bool first = true;
  for (std::size_t i = 0; i < t.d_left(); ++i)
    for (std::size_t j = 0; j < t.d_right(); ++j)
      for (std::size_t k = 0; k < t.d_out(); ++k) {
        const Rat& c = t.at(i, j, k);
        if (c == 0) continue;
        os << (first ? "\n" : ",\n") << "      [" << i << ", " << j << ", " << k << ", " << q(to_string(c)) << "]";
        first = false;
      }
  os << (first ? "]" : "\n    ]") << (last ? "\n" : ",\n");
}

void emit_partial(std::ostringstream& os, const RatMatrix& m, bool last) {
  os << "    \"partial\": [";
  bool first = true;
  for (std::size_t s = 0; s < m.cols(); ++s)
    for (std::size_t t = 0; t < m.rows(); ++t) {
      const Rat& c = m(t, s);
      if (c == 0) continue;
      os << (first ? "\n" : ",\n") << "      [" << s << ", " << t << ", " << q(to_string(c)) << "]";
      first = false;
    }
  os << (first ? "]" : "\n    ]") << (last ? "\n" : ",\n");
}

std::vector<std::size_t> dims_of(const FixtureObject& o) {
  return std::visit(
      [](const auto& x) -> std::vector<std::size_t> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CommAlg>) return {x.dim};
        else if constexpr (std::is_same_v<T, LeibnizAlg>) return {x.dim};
        else if constexpr (std::is_same_v<T, TCA>) return {x.d0, x.d1};
        else return {x.a.dim, x.gdim};
      },
      o);
}

}  // namespace

std::string Fixture::kind() const {
  static const char* names[] = {"comm_alg", "leibniz", "tca", "vertex_algebroid"};
  return names[object.index()];
}

Fixture parse_fixture(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FixtureError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) fail("fixture", "expected a JSON object");
  const json& kind_j = member(j, "kind", "fixture");
  if (!kind_j.is_string()) fail("kind", "expected a string");
  const KindInfo& info = info_for(kind_j.get<std::string>());

  Fixture f;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) fail("name", "expected a string");
    f.name = it->get<std::string>();
  }
  const json& dims_j = member(j, "dims", "fixture");
  if (!dims_j.is_object()) fail("dims", "expected an object");
  std::vector<std::size_t> dims;
  for (const char* key : info.dims) {
    const json& d = member(dims_j, key, "dims");
    if (!d.is_number_integer() || d.get<long long>() < 0) fail(std::string("dims.") + key, "expected a non-negative integer");
    dims.push_back(d.get<std::size_t>());
  }
  if (dims_j.size() != info.dims.size()) fail("dims", "unexpected key");
  if (info.has_unit && dims[0] == 0) fail("dims.A", "the algebra must contain a unit, so dim A >= 1");

  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_object()) fail("labels", "expected an object");
    for (auto l = it->begin(); l != it->end(); ++l) {
      std::size_t pos = info.dims.size();
      for (std::size_t i = 0; i < info.dims.size(); ++i)
        if (l.key() == info.dims[i]) pos = i;
      if (pos == info.dims.size()) fail("labels", "unknown space \"" + l.key() + "\"");
      if (!l->is_array() || l->size() != dims[pos]) fail("labels." + l.key(), "expected one string per basis vector");
      std::vector<std::string> names;
      for (const auto& s : *l) {
        if (!s.is_string()) fail("labels." + l.key(), "expected strings");
        names.push_back(s.get<std::string>());
      }
      f.labels[l.key()] = std::move(names);
    }
  }

  const json& tables = member(j, "tables", "fixture");
  const std::string kind = info.kind;
  if (kind == "comm_alg") {
    check_table_names(tables, {"mul"});
    const std::size_t n = dims[0];
    f.object = CommAlg{n, read_unit(j, n), read_trilinear(tables, "mul", {n, n, n})};
  } else if (kind == "leibniz") {
    check_table_names(tables, {"bracket"});
    const std::size_t n = dims[0];
    f.object = LeibnizAlg{n, read_trilinear(tables, "bracket", {n, n, n})};
  } else if (kind == "tca") {
    check_table_names(tables, {"partial", "act0", "brk0", "pair1"});
    const std::size_t d0 = dims[0], d1 = dims[1];
    f.object = TCA{d0, d1, read_partial(tables, d0, d1), read_trilinear(tables, "act0", {d1, d0, d0}),
                   read_trilinear(tables, "brk0", {d1, d1, d1}), read_trilinear(tables, "pair1", {d1, d1, d0})};
  } else {
    check_table_names(tables, {"mul", "mact", "brk", "pair", "act", "partial"});
    const std::size_t n = dims[0], g = dims[1];
    CommAlg a{n, read_unit(j, n), read_trilinear(tables, "mul", {n, n, n})};
    f.object = VertexAlgebroid{a,
                               g,
                               read_trilinear(tables, "mact", {n, g, g}),
                               read_trilinear(tables, "brk", {g, g, g}),
                               read_trilinear(tables, "pair", {g, g, n}),
                               read_trilinear(tables, "act", {g, n, n}),
                               read_partial(tables, n, g)};
  }
  if (!info.has_unit && j.contains("unit")) fail("unit", "not used by kind " + kind);

  if (auto it = j.find("subspaces"); it != j.end()) {
    if (!it->is_object()) fail("subspaces", "expected an object");
    for (auto s = it->begin(); s != it->end(); ++s) {
      const std::string w = "subspaces." + s.key();
      if (!s->is_array()) fail(w, "expected an array of rows");
      std::vector<Vec> rows;
      for (std::size_t r = 0; r < s->size(); ++r) {
        const json& row = (*s)[r];
        const std::string wr = w + "[" + std::to_string(r) + "]";
        if (!row.is_array()) fail(wr, "expected a row of rationals");
        bool fits = false;
        for (auto d : dims) fits = fits || row.size() == d;
        if (!fits) fail(wr, "row length matches no space of this fixture");
        Vec v;
        for (std::size_t c = 0; c < row.size(); ++c) v.push_back(read_rat(row[c], wr));
        rows.push_back(std::move(v));
      }
      f.subspaces[s.key()] = std::move(rows);
    }
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const char* known[] = {"kind", "name", "dims", "labels", "unit", "tables", "subspaces"};
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) fail("fixture", "unknown key \"" + it.key() + "\"");
  }
  return f;
}

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

std::string emit_fixture(const Fixture& f) {
  const KindInfo& info = info_for(f.kind());
  const auto dims = dims_of(f.object);
  std::ostringstream os;
  os << "{\n  \"kind\": " << q(info.kind) << ",\n  \"name\": " << q(f.name) << ",\n  \"dims\": {";
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? ", " : "") << q(info.dims[i]) << ": " << dims[i];
  os << "},\n";
  if (!f.labels.empty()) {
    os << "  \"labels\": {";
    bool first = true;
    for (const char* key : info.dims) {
      auto it = f.labels.find(key);
      if (it == f.labels.end()) continue;
      os << (first ? "" : ", ") << q(key) << ": [";
      for (std::size_t i = 0; i < it->second.size(); ++i) os << (i ? ", " : "") << q(it->second[i]);
      os << "]";
      first = false;
    }
    os << "},\n";
  }
  auto emit_unit = [&](const Vec& u) {
    os << "  \"unit\": [";
    bool first = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      os << (first ? "" : ", ") << "[" << i << ", " << q(to_string(u[i])) << "]";
      first = false;
    }
    os << "],\n";
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CommAlg>) {
          emit_unit(x.unit);
          os << "  \"tables\": {\n";
          emit_trilinear(os, "mul", x.mul, true);
        } else if constexpr (std::is_same_v<T, LeibnizAlg>) {
          os << "  \"tables\": {\n";
          emit_trilinear(os, "bracket", x.bracket, true);
        } else if constexpr (std::is_same_v<T, TCA>) {
          os << "  \"tables\": {\n";
          emit_partial(os, x.partial, false);
          emit_trilinear(os, "act0", x.act0, false);
          emit_trilinear(os, "brk0", x.brk0, false);
          emit_trilinear(os, "pair1", x.pair1, true);
        } else {
          emit_unit(x.a.unit);
          os << "  \"tables\": {\n";
          emit_trilinear(os, "mul", x.a.mul, false);
          emit_trilinear(os, "mact", x.mact, false);
          emit_trilinear(os, "brk", x.brk, false);
          emit_trilinear(os, "pair", x.pair, false);
          emit_trilinear(os, "act", x.act, false);
          emit_partial(os, x.partial, true);
        }
      },
      f.object);
  os << "  }";
  if (!f.subspaces.empty()) {
    os << ",\n  \"subspaces\": {";
    bool first_s = true;
    for (const auto& [name, rows] : f.subspaces) {
      os << (first_s ? "\n" : ",\n") << "    " << q(name) << ": [";
      for (std::size_t r = 0; r < rows.size(); ++r) {
        os << (r ? ",\n" : "\n") << "      [";
        for (std::size_t c = 0; c < rows[r].size(); ++c) os << (c ? ", " : "") << q(to_string(rows[r][c]));
        os << "]";
      }
      os << (rows.empty() ? "]" : "\n    ]");
      first_s = false;
    }
    os << "\n  }";
  }
  os << "\n}\n";
  return os.str();
}

std::optional<std::size_t> label_index(const Fixture& f, const std::string& space, const std::string& label) {
  auto it = f.labels.find(space);
  if (it == f.labels.end()) return std::nullopt;
  for (std::size_t i = 0; i < it->second.size(); ++i)
    if (it->second[i] == label) return i;
  return std::nullopt;
}

}  // namespace valg
