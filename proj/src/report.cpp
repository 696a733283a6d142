#include "valg/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace valg {

std::string to_string(const AxiomViolation& v) {
  std::string w = "(";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i) w += ",";
    w += std::to_string(v.witness[i]);
  }
  w += ")";
  return v.axiom_id + " at " + w + ": lhs=" + to_string(v.lhs) + " rhs=" + to_string(v.rhs);
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "FAIL";
    case Status::undetermined: return "undetermined";
  }
  return "?";
}

void Report::add(std::string id, bool ok, std::string detail) {
  checks.push_back({std::move(id), ok ? Status::pass : Status::fail, std::move(detail)});
}

void Report::add(std::string id, Status status, std::string detail) {
  checks.push_back({std::move(id), status, std::move(detail)});
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::pass; });
}

const Check* Report::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

bool parallel_enabled() { return std::getenv("VALG_NO_PARALLEL") == nullptr; }

std::vector<AxiomViolation> collect_ordered(std::size_t n,
                                            const std::function<void(std::size_t, std::vector<AxiomViolation>&)>& body) {
  std::vector<std::vector<AxiomViolation>> slots(n);
  unsigned workers = parallel_enabled() ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i, slots[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            body(i, slots[i]);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  std::vector<AxiomViolation> out;
  for (auto& s : slots) {
    for (auto& v : s) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace valg
