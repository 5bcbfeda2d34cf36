#include "premetric/residual.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "premetric/calculus.hpp"

namespace premetric {

SamplePlan SamplePlan::standard(int n) {
  SamplePlan p;
  p.box.assign(static_cast<std::size_t>(n), {-1.0, 1.0});
  return p;
}

SamplePlan SamplePlan::random(std::vector<std::pair<double, double>> box, int count,
                              std::uint64_t seed) {
  SamplePlan p;
  p.kind = Kind::random;
  p.box = std::move(box);
  p.count = count;
  p.seed = seed;
  return p;
}

void SamplePlan::validate() const {
  if (box.empty()) throw ContractViolation("sample plan: empty box");
  for (const auto& [lo, hi] : box) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
      throw ContractViolation("sample plan: degenerate box axis");
    }
  }
  if (kind == Kind::grid && points_per_axis < 2) {
    throw ContractViolation("sample plan: grid needs at least 2 points per axis");
  }
  if (kind == Kind::random && count < 1) throw ContractViolation("sample plan: count must be >= 1");
}

std::size_t SamplePlan::size() const {
  if (kind == Kind::random) return static_cast<std::size_t>(count);
  std::size_t s = 1;
  for (std::size_t i = 0; i < box.size(); ++i) s *= static_cast<std::size_t>(points_per_axis);
  return s;
}

std::vector<std::vector<double>> sample_points(const SamplePlan& plan) {
  plan.validate();
  const std::size_t dim = plan.box.size();
  std::vector<std::vector<double>> pts;
  pts.reserve(plan.size());
  if (plan.kind == SamplePlan::Kind::random) {
    Rng rng(plan.seed);
    for (int i = 0; i < plan.count; ++i) {
      std::vector<double> p(dim);
      for (std::size_t a = 0; a < dim; ++a) p[a] = rng.uniform(plan.box[a].first, plan.box[a].second);
      pts.push_back(std::move(p));
    }
    return pts;
  }
  const int m = plan.points_per_axis;
  std::vector<int> counter(dim, 0);
  while (true) {
    std::vector<double> p(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      const auto [lo, hi] = plan.box[a];
      p[a] = lo + (hi - lo) * counter[a] / (m - 1);
    }
    pts.push_back(std::move(p));
    std::size_t a = 0;
    while (a < dim && ++counter[a] == m) counter[a++] = 0;
    if (a == dim) break;
  }
  return pts;
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int Rng::integer(int lo, int hi) {
  if (hi < lo) throw ContractViolation("Rng::integer: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

void ResidualSet::append(const ResidualSet& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

bool ResidualReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

const CheckResult& ResidualReport::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return r;
  }
  throw std::out_of_range("no residual named '" + name + "'");
}

double ResidualReport::max_abs(const std::string& check) const {
  double m = 0.0;
  for (const auto& r : results) {
    if (r.check == check) m = std::max(m, r.max_abs_residual);
  }
  return m;
}

void ResidualReport::append(const ResidualReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

ResidualReport evaluate_residuals(const ResidualSet& set,
                                  const std::vector<std::vector<double>>& points, double tol,
                                  double scale) {
  // Fixed-size blocks reduced in block order keep the report independent of
  // the number of worker threads.
  constexpr std::size_t kBlock = 256;
  const std::size_t n_entries = set.entries.size();
  const std::size_t n_blocks = (points.size() + kBlock - 1) / kBlock;
  std::vector<double> block_max(n_blocks * n_entries, 0.0);
  std::vector<double> block_sq(n_blocks * n_entries, 0.0);

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto run_blocks = [&] {
    for (std::size_t b = next++; b < n_blocks; b = next++) {
      const std::size_t end = std::min(points.size(), (b + 1) * kBlock);
      for (std::size_t e = 0; e < n_entries; ++e) {
        double m = 0.0, sq = 0.0;
        for (std::size_t i = b * kBlock; i < end; ++i) {
          const double v = max_abs_at(set.entries[e].residual, points[i]);
          m = std::max(m, v);
          sq += v * v;
        }
        block_max[b * n_entries + e] = m;
        block_sq[b * n_entries + e] = sq;
      }
    }
  };
  auto worker = [&] {
    try {
      run_blocks();
    } catch (...) {
      const std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = n_blocks;
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(n_blocks, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < n_threads; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  ResidualReport report;
  report.warnings = set.warnings;
  for (std::size_t e = 0; e < n_entries; ++e) {
    CheckResult r;
    r.check = set.entries[e].check;
    r.name = set.entries[e].name;
    r.n_points = points.size();
    r.scale = scale;
    r.tolerance = tol;
    double sum_sq = 0.0;
    for (std::size_t b = 0; b < n_blocks; ++b) {
      r.max_abs_residual = std::max(r.max_abs_residual, block_max[b * n_entries + e]);
      sum_sq += block_sq[b * n_entries + e];
    }
    r.rms_residual = points.empty() ? 0.0 : std::sqrt(sum_sq / static_cast<double>(points.size()));
    r.pass = r.max_abs_residual <= tol * std::max(1.0, scale);
    report.results.push_back(std::move(r));
  }
  return report;
}

double derivative_scale(const std::vector<Expr>& exprs,
                        const std::vector<std::vector<double>>& points) {
  if (points.empty()) return 0.0;
  const int dim = static_cast<int>(points.front().size());
  std::vector<Expr> derivs;
  for (const Expr& e : exprs) {
    for (int k = 0; k < dim; ++k) {
      Expr d = differentiate(e, k);
      if (!d.is_constant(0.0)) derivs.push_back(std::move(d));
    }
  }
  double m = 0.0;
  for (const auto& p : points) {
    for (const Expr& d : derivs) m = std::max(m, std::abs(eval(d, p)));
  }
  return m;
}

}  // namespace premetric
