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

#ifndef GHZLHV_LP_HPP
#define GHZLHV_LP_HPP

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <vector>

#include "ghzlhv/lhv_model.hpp"
#include "ghzlhv/quantum_model.hpp"
#include "ghzlhv/settings.hpp"
#include "ghzlhv/simplex_solver.hpp"

namespace ghz {

/// maximize V  subject to  sum_s w_s T_s = V c,  sum_s w_s = 1,  w >= 0,
/// 0 <= V <= 1
///
/// where the T_s are the product tensors of the strategy basis and c is the
/// noiseless correlation tensor of the grid. The optimum is the critical
/// visibility: the largest V at which the noisy correlations still have a
/// local-hidden-variable model.
struct LpProblem {
  std::shared_ptr<const StrategyBasis> basis;
  /// Correlation tensor at V = 1, row-major, same layout as the basis tensors.
  std::vector<double> targets;

  /// One equality per tensor entry plus normalization.
  std::size_t constraint_count() const { return targets.size() + 1; }
  /// One weight per basis column plus V.
  std::size_t variable_count() const { return basis->size() + 1; }
};

LpProblem build_problem(const SettingsGrid& grid, const BasisOptions& opts = {});

/// Reuses a basis built for the grid's setting counts.
LpProblem build_problem(std::shared_ptr<const StrategyBasis> basis,
                        const SettingsGrid& grid);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  /// Optimal V, or the best feasible V reached before an iteration limit.
  double v_max = 0.0;
  /// Mixture weight per basis column.
  std::vector<double> weights;
  /// Dual value per constraint (tensor entries, then normalization), in the
  /// maximization convention: for every basis column T,
  /// sum_e duals[e] T[e] + duals.back() >= 0, and the objective equals
  /// duals.back() + bound_dual.
  std::vector<double> duals;
  /// Dual of the V <= 1 bound.
  double bound_dual = 0.0;
  std::size_t iterations = 0;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

/// Throws SolverError if the solver reports infeasibility or unboundedness;
/// neither can happen for problems built by build_problem.
LpSolution solve_lp(const LpProblem& problem, const SimplexOptions& opts = {});

LpSolution critical_visibility(const SettingsGrid& grid,
                               const BasisOptions& basis_opts = {},
                               const SimplexOptions& solver_opts = {});

/// max_e |sum_s w_s T_s[e] - v_max c[e]|
double mixture_residual(const LpProblem& problem, const LpSolution& solution);

/// Writes the problem in free MPS format (OBJSENSE MAX). Columns are named
/// W<k> for basis column k and V for the visibility; rows E<k> for tensor
/// entry k and NORM for normalization.
void write_mps(const LpProblem& problem, std::ostream& out);

}  // namespace ghz

#endif  // GHZLHV_LP_HPP
