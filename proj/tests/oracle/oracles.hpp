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

// Test-only reference computations. Nothing here calls into the code paths
// they check: tensors are built with nested loops, LPs are solved by
// enumerating every basis, quantum predictions come from explicit state
// vectors and Pauli matrices.

#ifndef GHZLHV_TESTS_ORACLE_ORACLES_HPP
#define GHZLHV_TESTS_ORACLE_ORACLES_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using Tensor = std::vector<int>;

/// Every raw product tensor, one per +/-1 assignment, row-major with the last
/// party fastest.
std::vector<Tensor> raw_product_tensors(const std::vector<std::size_t>& counts);

/// Distinct tensors by pairwise comparison, in first-seen order.
std::vector<Tensor> distinct_pairwise(const std::vector<Tensor>& tensors);

/// max V s.t. sum_k w_k T_k = V c, sum w = 1, w >= 0, capped at 1, by
/// solving every square basis subsystem and keeping the feasible ones.
double vmax_by_vertex_enumeration(const std::vector<Tensor>& columns,
                                  const std::vector<double>& c);

/// <psi| (a.sigma) (x) (b.sigma) (x) ... |psi> for the N-qubit GHZ state,
/// each direction given as (theta, phi).
double ghz_correlation_density(const std::vector<std::pair<double, double>>& dirs);

/// P(outcomes) for rho = V |GHZ><GHZ| + (1 - V) I / 2^N, from projectors.
double ghz_probability_density(const std::vector<int>& outcomes,
                               const std::vector<std::pair<double, double>>& dirs,
                               double v);

/// Correlation tensor at V = 1 via ghz_correlation_density, coplanar.
std::vector<double> coplanar_targets(const std::vector<std::vector<double>>& angles);

}  // namespace oracle

#endif  // GHZLHV_TESTS_ORACLE_ORACLES_HPP
