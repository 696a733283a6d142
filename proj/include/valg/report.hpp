#pragma once

#include "valg/rational.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace valg {

/// One failed instance of an identity: the basis tuple where it fails and the
/// two sides as coordinate vectors.
struct AxiomViolation {
  std::string axiom_id;
  std::vector<std::size_t> witness;
  Vec lhs;
  Vec rhs;
};

std::string to_string(const AxiomViolation& v);

enum class Status { pass, fail, undetermined };

const char* to_string(Status s);

/// A named claim evaluated on a concrete object.
struct Check {
  std::string id;
  Status status = Status::fail;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string id, bool ok, std::string detail = {});
  void add(std::string id, Status status, std::string detail = {});
  void append(const Report& other);

  bool all_pass() const;
  const Check* find(const std::string& id) const;
};

/// Runs body(i) for i in [0, n) and concatenates the per-index results in
/// index order. Work is spread over hardware threads unless the environment
/// variable VALG_NO_PARALLEL is set.
std::vector<AxiomViolation> collect_ordered(std::size_t n,
                                            const std::function<void(std::size_t, std::vector<AxiomViolation>&)>& body);

bool parallel_enabled();

}  // namespace valg
