#pragma once

#include "valg/criteria.hpp"
#include "valg/leibniz.hpp"
#include "valg/report.hpp"
#include "valg/vertex_algebroid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace valg {

enum class FamilyVariant { simple, semisimple };

/// l copies N^1..N^l of the 2-dimensional sl2-module inside A.
/// dim A = 2l + 1, dim Gamma = 2l + 3. The simple variant needs l = 1.
struct FamilySpec {
  std::size_t l = 1;
  FamilyVariant variant = FamilyVariant::semisimple;
};

/// Basis positions. A: 1, a_{j,0}, a_{j,1}, ... Gamma: e, f, h, d(a_{j,0}), d(a_{j,1}), ...
/// j runs from 1 to l.
namespace family_index {
constexpr std::size_t unit = 0, e = 0, f = 1, h = 2;
inline std::size_t a(std::size_t j, std::size_t i) { return 1 + 2 * (j - 1) + i; }
inline std::size_t d(std::size_t j, std::size_t i) { return 3 + 2 * (j - 1) + i; }
}  // namespace family_index

/// Throws std::invalid_argument for l = 0 or a simple variant with l != 1.
void validate(const FamilySpec& spec);

struct FamilyLabels {
  std::vector<std::string> a;
  std::vector<std::string> gamma;
};
FamilyLabels family_labels(const FamilySpec& spec);

/// The vertex algebroid with sl2 Levi factor, e_1f = 1, h_1h = 2, A acting
/// on each N^j as the 2-dimensional module, a_{j,i} * a_{j',i'} = 0.
VertexAlgebroid build_sl2_algebroid(const FamilySpec& spec);

/// The Levi candidate (e, f, h) of the family, in Gamma coordinates.
LeviTriple family_levi(const FamilySpec& spec);

/// Rebuilds the family and recomputes every structural claim from it.
Report verify_family_theorems(const FamilySpec& spec);

/// sl2 + V with V irreducible of dimension m (m >= 1); hemisemidirect.
LeibnizAlg build_simple_leibniz_sl2(long m);

enum class ProbeVariant { unit, nil, reference };

struct ProbeResult {
  bool feasible = false;
  std::vector<std::string> trace;
  std::optional<VertexAlgebroid> model;
};

/// Can A = C1 + Ca with N = Ca one-dimensional carry a vertex algebroid over
/// Gamma = sl2 + C d(a) with e_1f = k1, k != 0? Follows the linear chain:
/// invariance of a.v under sl2, the split on a*a, then the pairing relation
/// at (e, f). The reference variant checks the l = 1 family instead.
ProbeResult probe_dim1_extension(ProbeVariant variant);

}  // namespace valg
