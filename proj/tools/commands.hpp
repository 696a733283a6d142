#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace valg::cli {

/// Exit codes shared by every command.
enum Exit : int { ok = 0, violations = 1, usage = 2 };

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int cmd_check(const std::filesystem::path& path, const std::optional<std::string>& kind, bool json, Streams io);
int cmd_invariants(const std::filesystem::path& path, bool json, Streams io);
/// Writes the fixture to out_path, or to io.out when none is given.
int cmd_family_emit(long l, const std::optional<std::filesystem::path>& out_path, Streams io);
int cmd_family_verify(long l, bool json, Streams io);
/// levi: rows separated by ';', each a basis label or comma-separated
/// rationals. Without it the fixture's "levi" subspace is used if present.
int cmd_criteria(const std::filesystem::path& path, const std::optional<std::string>& levi, bool json, Streams io);
int cmd_probe(const std::string& variant, Streams io);

}  // namespace valg::cli
