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

#ifndef GHZLHV_OPTIMIZER_HPP
#define GHZLHV_OPTIMIZER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ghzlhv/lhv_model.hpp"
#include "ghzlhv/lp.hpp"
#include "ghzlhv/nelder_mead.hpp"
#include "ghzlhv/settings.hpp"

namespace ghz {

struct SearchOptions {
  BasisOptions basis;
  SimplexOptions solver;
  /// Worker threads for restarts and scan samples. Results do not depend on
  /// this value.
  unsigned threads = 1;
};

struct RestartRecord {
  std::vector<double> start;
  std::vector<double> end;
  double end_value = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct OptimizationReport {
  std::vector<std::size_t> counts;
  SimplexConfig config;
  SettingsGrid best_grid;
  /// Minimum of the restarts' end values (first restart wins ties).
  double best_v = 1.0;
  std::size_t best_restart = 0;
  std::vector<RestartRecord> restarts;
  std::size_t lp_solves = 0;
};

/// Critical visibility as a function of the coplanar angles, party-major.
class VisibilityObjective {
 public:
  VisibilityObjective(std::vector<std::size_t> counts, const SearchOptions& opts);

  /// Throws SolverError unless the LP reaches optimality.
  double operator()(std::span<const double> angles) const;

  const std::vector<std::size_t>& counts() const { return counts_; }
  std::size_t dimension() const;

 private:
  std::vector<std::size_t> counts_;
  std::shared_ptr<const StrategyBasis> basis_;
  SimplexOptions solver_;
};

/// Multi-restart Nelder-Mead over one angle per setting. Restart r starts from
/// AngleSampler(cfg.seed, r), one uniform angle per coordinate.
OptimizationReport minimize_vmax(std::span<const std::size_t> counts,
                                 const SimplexConfig& cfg,
                                 const SearchOptions& opts = {});

struct DistributionSummary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

/// Quartiles with linear interpolation between order statistics.
DistributionSummary summarize(std::vector<double> values);

struct ScanReport {
  std::vector<std::size_t> counts;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// Critical visibility of sample s at index s.
  std::vector<double> values;
  /// Angles of the sample with the smallest value; empty when samples == 0.
  std::vector<double> best_angles;
  std::size_t best_sample = 0;
  DistributionSummary summary;
  std::size_t lp_solves = 0;
};

/// Critical visibility at `samples` random grids; sample s draws its angles
/// from AngleSampler(seed, s).
ScanReport random_scan(std::span<const std::size_t> counts, std::size_t samples,
                       std::uint64_t seed, const SearchOptions& opts = {});

LpSolution evaluate_fixed(const SettingsGrid& grid, const SearchOptions& opts = {});

}  // namespace ghz

#endif  // GHZLHV_OPTIMIZER_HPP
