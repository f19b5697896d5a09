// Copyright 2026 The ghzlhv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ghzlhv/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "ghzlhv/errors.hpp"
#include "ghzlhv/random.hpp"

namespace ghz {
namespace {

// Runs body(i) for i in [0, n). Each index is handled exactly once; callers
// write into per-index slots so the outcome is independent of scheduling.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace

VisibilityObjective::VisibilityObjective(std::vector<std::size_t> counts,
                                         const SearchOptions& opts)
    : counts_(std::move(counts)),
      basis_(std::make_shared<const StrategyBasis>(build_basis(counts_, opts.basis))),
      solver_(opts.solver) {}

std::size_t VisibilityObjective::dimension() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

double VisibilityObjective::operator()(std::span<const double> angles) const {
  const auto grid = SettingsGrid::from_flat_angles(angles, counts_);
  const LpSolution s = solve_lp(build_problem(basis_, grid), solver_);
  if (!s.optimal()) {
    throw SolverError(std::string("visibility LP stopped with status ") +
                      to_string(s.status));
  }
  return s.v_max;
}

OptimizationReport minimize_vmax(std::span<const std::size_t> counts,
                                 const SimplexConfig& cfg,
                                 const SearchOptions& opts) {
  cfg.validate();
  const VisibilityObjective objective(
      std::vector<std::size_t>(counts.begin(), counts.end()), opts);
  const std::size_t dim = objective.dimension();

  std::vector<RestartRecord> records(cfg.restarts);
  parallel_for(cfg.restarts, opts.threads, [&](std::size_t r) {
    AngleSampler sampler(cfg.seed, r);
    RestartRecord& rec = records[r];
    rec.start = sampler.angles(dim);
    const auto nm = nelder_mead(
        [&](std::span<const double> x) { return objective(x); }, rec.start, cfg);
    rec.end = nm.argmin;
    rec.end_value = nm.value;
    rec.iterations = nm.iterations;
    rec.evaluations = nm.evaluations;
    rec.converged = nm.converged;
  });

  std::size_t best = 0;
  std::size_t solves = 0;
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (records[r].end_value < records[best].end_value) best = r;
    solves += records[r].evaluations;
  }
  return OptimizationReport{
      .counts = objective.counts(),
      .config = cfg,
      .best_grid = SettingsGrid::from_flat_angles(records[best].end, counts),
      .best_v = records[best].end_value,
      .best_restart = best,
      .restarts = std::move(records),
      .lp_solves = solves,
  };
}

DistributionSummary summarize(std::vector<double> values) {
  DistributionSummary s;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
  };
  s.min = values.front();
  s.q1 = quantile(0.25);
  s.median = quantile(0.5);
  s.q3 = quantile(0.75);
  s.max = values.back();
  return s;
}

ScanReport random_scan(std::span<const std::size_t> counts, std::size_t samples,
                       std::uint64_t seed, const SearchOptions& opts) {
  ScanReport report;
  report.counts.assign(counts.begin(), counts.end());
  report.samples = samples;
  report.seed = seed;
  if (samples == 0) {
    validate_counts(counts);
    return report;
  }
  const VisibilityObjective objective(report.counts, opts);
  const std::size_t dim = objective.dimension();

  report.values.resize(samples);
  parallel_for(samples, opts.threads, [&](std::size_t s) {
    AngleSampler sampler(seed, s);
    report.values[s] = objective(sampler.angles(dim));
  });
  report.lp_solves = samples;
  report.best_sample = static_cast<std::size_t>(
      std::min_element(report.values.begin(), report.values.end()) -
      report.values.begin());
  report.best_angles = AngleSampler(seed, report.best_sample).angles(dim);
  report.summary = summarize(report.values);
  return report;
}

LpSolution evaluate_fixed(const SettingsGrid& grid, const SearchOptions& opts) {
  return critical_visibility(grid, opts.basis, opts.solver);
}

}  // namespace ghz
