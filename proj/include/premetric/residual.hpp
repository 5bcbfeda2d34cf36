#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "premetric/expr.hpp"

namespace premetric {

/// Where residuals are evaluated. Grid plans place points_per_axis nodes per
/// axis including both ends; random plans draw `count` uniform points.
struct SamplePlan {
  enum class Kind { grid, random };
  Kind kind = Kind::random;
  std::vector<std::pair<double, double>> box;  // per axis [lo, hi]
  int points_per_axis = 8;
  int count = 4096;
  std::uint64_t seed = 1;

  /// Default plan: random, 4096 points in [-1,1]^n, seed 1.
  static SamplePlan standard(int n);
  static SamplePlan random(std::vector<std::pair<double, double>> box, int count,
                           std::uint64_t seed);

  void validate() const;
  std::size_t size() const;
};

std::vector<std::vector<double>> sample_points(const SamplePlan& plan);

/// Deterministic generator shared by sampling, catalog and identity suites.
/// The mt19937_64 output sequence is fixed by the standard; the mappings to
/// doubles and integers are done here so results do not depend on the
/// standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  double uniform();  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer in [lo, hi].
  int integer(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

/// One named symbolic residual; it vanishes identically on configurations
/// that satisfy the corresponding equation.
struct ResidualEntry {
  std::string check;
  std::string name;
  Field residual;
};

struct ResidualSet {
  std::vector<ResidualEntry> entries;
  std::vector<std::string> warnings;

  void add(std::string check, std::string name, Field residual) {
    entries.push_back({std::move(check), std::move(name), std::move(residual)});
  }
  void append(const ResidualSet& other);
};

struct CheckResult {
  std::string check;
  std::string name;
  double max_abs_residual = 0.0;
  double rms_residual = 0.0;
  std::size_t n_points = 0;
  double scale = 1.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ResidualReport {
  std::vector<CheckResult> results;
  std::vector<std::string> warnings;

  bool all_pass() const;
  /// Looks up a result by entry name (first match), throws if absent.
  const CheckResult& find(const std::string& name) const;
  double max_abs(const std::string& check) const;
  void append(const ResidualReport& other);
};

/// Evaluates every entry at every point. An entry passes iff
/// max_abs_residual <= tol * max(1, scale).
ResidualReport evaluate_residuals(const ResidualSet& set,
                                  const std::vector<std::vector<double>>& points, double tol,
                                  double scale);

/// max over points, expressions and coordinates of |d expr / d x^k|.
double derivative_scale(const std::vector<Expr>& exprs,
                        const std::vector<std::vector<double>>& points);

}  // namespace premetric
