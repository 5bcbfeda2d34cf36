#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "premetric/field_spec.hpp"

using namespace premetric;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw SpecError("cannot write " + path);
  out << text;
}

int run_check_command(const std::string& spec_path, const std::optional<double>& tol,
                      const std::string& report_path, const std::string& csv_path) {
  FieldSpec spec = load_field_spec(spec_path);
  if (tol) {
    if (!(*tol > 0.0)) throw SpecError("--tol must be positive");
    spec.tolerance = *tol;
  }
  const ResidualReport report = run_check(spec);
  for (const CheckResult& r : report.results) {
    std::printf("%s  %s/%s  max=%.3e rms=%.3e scale=%.3g n=%zu\n", r.pass ? "PASS" : "FAIL",
                r.check.c_str(), r.name.c_str(), r.max_abs_residual, r.rms_residual, r.scale,
                r.n_points);
  }
  for (const std::string& w : report.warnings) std::printf("warning: %s\n", w.c_str());
  std::printf("verdict: %s\n", report.all_pass() ? "pass" : "fail");
  if (!report_path.empty()) write_file(report_path, report_to_json(report).dump(2) + "\n");
  if (!csv_path.empty()) write_file(csv_path, report_to_csv(report));
  return report.all_pass() ? kPass : kFail;
}

int run_identities_command(const std::vector<int>& dims, int trials, std::uint64_t seed) {
  IdentityReport report;
  try {
    report = run_identities(dims, trials, seed);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  std::cout << identities_to_json(report, dims, trials, seed).dump(2) << "\n";
  return report.all_pass() ? kPass : kFail;
}

void print_catalog() {
  for (const CatalogEntry& e : catalog_entries()) {
    std::printf("%s%s\n  %s\n", e.name.c_str(), e.gated ? "  [gated]" : "", e.description.c_str());
    for (const CatalogParam& p : e.params) {
      std::printf("  --%s (default %s): %s\n", p.name.c_str(), p.default_value.c_str(), p.doc.c_str());
    }
    if (!e.checks.empty()) {
      std::string checks;
      for (const auto& c : e.checks) checks += (checks.empty() ? "" : ", ") + c;
      std::printf("  passes: %s\n", checks.c_str());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pre-metric electrodynamics residual checker"};
  app.require_subcommand(1);

  std::string spec_path, report_path, csv_path;
  std::optional<double> tol;
  auto* check = app.add_subcommand("check", "evaluate residual checks for a field spec");
  check->add_option("--spec", spec_path, "field-spec JSON file")->required();
  check->add_option("--tol", tol, "tolerance override");
  check->add_option("--report", report_path, "write the JSON report here");
  check->add_option("--csv", csv_path, "write the CSV report here");

  std::vector<int> dims = {2, 3, 4, 5, 6};
  int trials = 1000;
  std::uint64_t seed = 1;
  auto* identities = app.add_subcommand("identities", "run the exact algebraic identity suite");
  identities->add_option("--dims", dims, "dimensions, comma separated")->delimiter(',');
  identities->add_option("--trials", trials, "random instances per identity and dimension");
  identities->add_option("--seed", seed, "generator seed");

  bool as_json = false;
  auto* cat = app.add_subcommand("catalog", "list catalog entries");
  cat->add_flag("--json", as_json, "machine-readable listing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return run_check_command(spec_path, tol, report_path, csv_path);
    if (*identities) return run_identities_command(dims, trials, seed);
    if (as_json) {
      std::cout << catalog_to_json().dump(2) << "\n";
    } else {
      print_catalog();
    }
    return kPass;
  } catch (const SpecError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  } catch (const ContractViolation& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  }
}
