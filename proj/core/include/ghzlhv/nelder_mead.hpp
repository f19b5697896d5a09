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

#ifndef GHZLHV_NELDER_MEAD_HPP
#define GHZLHV_NELDER_MEAD_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ghz {

/// Downhill simplex parameters plus the multi-restart driver's knobs.
struct SimplexConfig {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  /// Stop once max - min of the objective over the simplex vertices drops
  /// below this.
  double tolerance = 1e-6;
  std::size_t max_iterations = 2000;
  std::size_t restarts = 30;
  std::uint64_t seed = 1;
  /// Edge length of the initial axis-aligned simplex around the start point.
  double initial_step = 0.5;

  /// Throws InputError unless reflection > 0, expansion > 1,
  /// 0 < contraction < 1, 0 < shrink < 1, tolerance > 0, restarts >= 1 and
  /// initial_step > 0.
  void validate() const;
};

struct NelderMeadResult {
  std::vector<double> argmin;
  double value = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  /// False when the run stopped at max_iterations.
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Nelder-Mead minimization from `start`. Deterministic: vertex ties are
/// broken by insertion order.
NelderMeadResult nelder_mead(const Objective& objective,
                             std::span<const double> start,
                             const SimplexConfig& cfg);

}  // namespace ghz

#endif  // GHZLHV_NELDER_MEAD_HPP
