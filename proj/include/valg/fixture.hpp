#pragma once

#include "valg/comm_alg.hpp"
#include "valg/leibniz.hpp"
#include "valg/tca.hpp"
#include "valg/vertex_algebroid.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace valg {

/// Malformed or inconsistent fixture text. The message names the JSON path
/// or byte offset of the problem.
class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using FixtureObject = std::variant<CommAlg, LeibnizAlg, TCA, VertexAlgebroid>;

/// Structure-constant file. Sparse table entries [i, j, k, "p/q"] are kept in
/// lexicographic order and zero entries are dropped, so emit(parse(emit(x)))
/// is byte-identical to emit(x).
///
///   comm_alg          dims {A}          unit, tables mul
///   leibniz           dims {L}          tables bracket
///   tca               dims {C0, C1}     tables partial, act0, brk0, pair1
///   vertex_algebroid  dims {A, Gamma}   unit, tables mul, mact, brk, pair, act, partial
///
/// partial entries are [source, target, "p/q"]: d(b_source) has that
/// coefficient on b_target. "labels" maps each dims key to basis names and
/// "subspaces" maps a name to dense rows (e.g. "levi": rows e, f, h).
struct Fixture {
  std::string name;
  FixtureObject object;
  std::map<std::string, std::vector<std::string>> labels;
  std::map<std::string, std::vector<Vec>> subspaces;

  std::string kind() const;
};

Fixture parse_fixture(std::string_view text);
Fixture load_fixture(const std::filesystem::path& path);
std::string emit_fixture(const Fixture& f);

/// Resolves a basis label in the fixture's space named by dims key.
std::optional<std::size_t> label_index(const Fixture& f, const std::string& space, const std::string& label);

}  // namespace valg
