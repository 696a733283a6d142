#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace valg::cli;
  CLI::App app{"Exact structure-constant checks for Leibniz algebras, conformal algebras and vertex algebroids"};
  app.require_subcommand(1);

  std::string path, kind, levi, variant, out_path;
  bool json = false, emit = false, verify = false;
  long l = 0;

  auto* check = app.add_subcommand("check", "Run the axiom suite of a fixture");
  check->add_option("path", path, "Fixture file")->required();
  check->add_option("--kind", kind, "Expected kind");
  check->add_flag("--json", json, "Machine-readable report");

  auto* inv = app.add_subcommand("invariants", "Structural subspaces of a vertex algebroid");
  inv->add_option("path", path, "Fixture file")->required();
  inv->add_flag("--json", json, "Machine-readable report");

  auto* fam = app.add_subcommand("family", "Emit or verify the sl2 family");
  fam->add_option("--l", l, "Number of two-dimensional summands")->required();
  auto* emit_flag = fam->add_flag("--emit", emit, "Write the fixture");
  auto* verify_flag = fam->add_flag("--verify", verify, "Check every structural claim");
  emit_flag->excludes(verify_flag);
  fam->add_option("--out", out_path, "Output file for --emit")->needs(emit_flag);
  fam->add_flag("--json", json, "Machine-readable report");

  auto* crit = app.add_subcommand("criteria", "Evaluate the indecomposable non-simple criteria");
  crit->add_option("path", path, "Fixture file")->required();
  crit->add_option("--levi", levi, "Rows e;f;h as labels or comma-separated rationals");
  crit->add_flag("--json", json, "Machine-readable report");

  auto* probe = app.add_subcommand("probe", "Dimension-one extension probe");
  bool reference = false;
  auto* variant_opt = probe->add_option("--variant", variant, "unit, nil or reference");
  auto* reference_flag = probe->add_flag("--reference", reference, "Control run on the l=1 family model");
  variant_opt->excludes(reference_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : usage;
  }

  Streams io{std::cout, std::cerr};
  try {
    if (*check) return cmd_check(path, kind.empty() ? std::nullopt : std::optional(kind), json, io);
    if (*inv) return cmd_invariants(path, json, io);
    if (*fam) {
      if (emit == verify) {
        std::cerr << "error: family needs exactly one of --emit or --verify\n";
        return usage;
      }
      if (emit) return cmd_family_emit(l, out_path.empty() ? std::nullopt : std::optional<std::filesystem::path>(out_path), io);
      return cmd_family_verify(l, json, io);
    }
    if (*crit) return cmd_criteria(path, levi.empty() ? std::nullopt : std::optional(levi), json, io);
    if (*probe) {
      if (reference) variant = "reference";
      if (variant.empty()) {
        std::cerr << "error: probe needs --variant or --reference\n";
        return usage;
      }
      return cmd_probe(variant, io);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
