#pragma once

#include "valg/report.hpp"
#include "valg/vertex_algebroid.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace valg {

/// Ordered Levi candidate (e, f, h) as vectors in Gamma.
using LeviTriple = std::array<Vec, 3>;

struct CriteriaVerdict {
  /// One check per clause, ids like "Thm 1.1(b)"; detail carries witnesses.
  Report clauses;
  /// Every triggered conclusion, strongest first: 1.2(i), 1.2(ii), 1.1(i),
  /// 1.1(ii), 1.1(iii).
  std::vector<std::string> conclusions;
  /// First conclusion, or "NoVerdict: ..." naming what failed.
  std::string verdict;

  bool decided() const { return !conclusions.empty(); }
};

/// Evaluates the hypotheses of both main criteria on the degree 0 and 1
/// data. Generation of V by its degree 0 and 1 parts is not computable from
/// an algebroid; it is recorded as an assumption. Throws
/// std::invalid_argument if b fails check_vertex_algebroid.
CriteriaVerdict criteria_engine(const VertexAlgebroid& b, const std::optional<LeviTriple>& levi);

/// Some u with [u,u] != 0, decided from the polarization of u -> [u,u].
std::optional<Vec> nonzero_square(const LeibnizAlg& l);

}  // namespace valg
