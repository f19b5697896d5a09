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

#ifndef GHZLHV_QUANTUM_MODEL_HPP
#define GHZLHV_QUANTUM_MODEL_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "ghzlhv/settings.hpp"

namespace ghz {

/// Dense row-major tensor of full-correlation values, one entry per choice of
/// one setting for every party. The last party's index varies fastest.
class CorrelationTensor {
 public:
  CorrelationTensor(std::vector<std::size_t> dims, std::vector<double> values);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  double at(std::span<const std::size_t> index) const;
  double operator[](std::size_t flat) const { return values_[flat]; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<double> values_;
};

/// Number of entries of a tensor with the given per-party dimensions.
std::size_t tensor_size(std::span<const std::size_t> dims);

/// Row-major flat offset of a multi-index.
std::size_t flat_index(std::span<const std::size_t> dims,
                       std::span<const std::size_t> index);

std::array<double, 3> direction_to_vector(const AnalyzerDirection& d);

/// Three-qubit GHZ outcome probability for the state
/// V |GHZ><GHZ| + (1 - V) I/8:
///
///   P(m,l,k) = 1/8 (1 + V (ml a3 b3 + mk a3 c3 + lk b3 c3
///                          + mlk sum_rps M_rps a_r b_p c_s))
///
/// with the only nonzero M entries M111 = 1, M122 = M212 = M221 = -1. For
/// coplanar directions this is 1/8 (1 + mlk V cos(alpha + beta + gamma)).
/// Outcomes must be +1 or -1; exactly three parties.
double joint_probability(std::span<const int> outcomes,
                         std::span<const AnalyzerDirection> directions,
                         Visibility v);

/// Full correlation V cos(sum of angles) for coplanar settings, N >= 2 parties.
double correlation(std::span<const double> angles, Visibility v);

/// Correlation tensor of a coplanar grid. Throws InputError otherwise.
CorrelationTensor correlation_tensor(const SettingsGrid& grid, Visibility v);

/// Single- and two-party marginals of the three-qubit distribution, obtained
/// by summing joint_probability over the unobserved outcomes.
struct Marginals {
  /// single[party][o], o = 0 for outcome +1 and 1 for -1.
  std::array<std::array<double, 2>, 3> single{};
  /// pair[k][o1][o2] for the party pairs (0,1), (0,2), (1,2).
  std::array<std::array<std::array<double, 2>, 2>, 3> pair{};
};

Marginals marginals(std::span<const AnalyzerDirection> directions, Visibility v);

}  // namespace ghz

#endif  // GHZLHV_QUANTUM_MODEL_HPP
