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

#include "ghzlhv/quantum_model.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ghzlhv/errors.hpp"

namespace ghz {

CorrelationTensor::CorrelationTensor(std::vector<std::size_t> dims,
                                     std::vector<double> values)
    : dims_(std::move(dims)), values_(std::move(values)) {
  if (tensor_size(dims_) != values_.size()) {
    throw InputError("correlation tensor size does not match its dimensions");
  }
}

double CorrelationTensor::at(std::span<const std::size_t> index) const {
  return values_[flat_index(dims_, index)];
}

std::size_t tensor_size(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

std::size_t flat_index(std::span<const std::size_t> dims,
                       std::span<const std::size_t> index) {
  if (index.size() != dims.size()) {
    throw InputError("tensor index rank mismatch");
  }
  std::size_t flat = 0;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    if (index[p] >= dims[p]) throw InputError("tensor index out of range");
    flat = flat * dims[p] + index[p];
  }
  return flat;
}

std::array<double, 3> direction_to_vector(const AnalyzerDirection& d) {
  return d.unit_vector();
}

double joint_probability(std::span<const int> outcomes,
                         std::span<const AnalyzerDirection> directions,
                         Visibility v) {
  if (outcomes.size() != 3 || directions.size() != 3) {
    throw InputError("joint_probability implements the three-party formula; got " +
                     std::to_string(directions.size()) + " parties");
  }
  for (int o : outcomes) {
    if (o != 1 && o != -1) throw InputError("outcomes must be +1 or -1");
  }
  const auto a = directions[0].unit_vector();
  const auto b = directions[1].unit_vector();
  const auto c = directions[2].unit_vector();
  const double m = outcomes[0];
  const double l = outcomes[1];
  const double k = outcomes[2];

  // Nonzero M_rps: M111 = 1, M122 = M212 = M221 = -1 (1-based components).
  const double triple = a[0] * b[0] * c[0] - a[0] * b[1] * c[1] -
                        a[1] * b[0] * c[1] - a[1] * b[1] * c[0];
  // White noise mixes the state with the identity, so every correlation term
  // carries V. In the coplanar case the two-body terms vanish.
  const double pairs = m * l * a[2] * b[2] + m * k * a[2] * c[2] + l * k * b[2] * c[2];
  return (1.0 + v.value() * (pairs + m * l * k * triple)) / 8.0;
}

double correlation(std::span<const double> angles, Visibility v) {
  const double sum = std::accumulate(angles.begin(), angles.end(), 0.0);
  return v.value() * std::cos(sum);
}

CorrelationTensor correlation_tensor(const SettingsGrid& grid, Visibility v) {
  if (!grid.coplanar()) {
    throw InputError("correlation tensors are only defined for coplanar grids");
  }
  const auto dims = grid.counts();
  const std::size_t n = tensor_size(dims);
  std::vector<std::vector<double>> angles;
  for (std::size_t p = 0; p < grid.party_count(); ++p) {
    angles.push_back(grid.angles(p));
  }

  std::vector<double> values(n);
  std::vector<std::size_t> index(dims.size(), 0);
  std::vector<double> picked(dims.size());
  for (std::size_t flat = 0; flat < n; ++flat) {
    for (std::size_t p = 0; p < dims.size(); ++p) picked[p] = angles[p][index[p]];
    values[flat] = correlation(picked, v);
    // Odometer increment, last party fastest.
    for (std::size_t p = dims.size(); p-- > 0;) {
      if (++index[p] < dims[p]) break;
      index[p] = 0;
    }
  }
  return CorrelationTensor(dims, std::move(values));
}

Marginals marginals(std::span<const AnalyzerDirection> directions,
                    Visibility v) {
  if (directions.size() != 3) {
    throw InputError("marginals are defined for three parties");
  }
  for (const auto& d : directions) {
    if (!d.is_coplanar()) {
      throw InputError("marginals require coplanar directions");
    }
  }
  constexpr std::array<std::array<int, 2>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};
  Marginals out;
  for (int m = 0; m < 2; ++m) {
    for (int l = 0; l < 2; ++l) {
      for (int k = 0; k < 2; ++k) {
        const std::array<int, 3> idx{m, l, k};
        const std::array<int, 3> outcomes{1 - 2 * m, 1 - 2 * l, 1 - 2 * k};
        const double p = joint_probability(outcomes, directions, v);
        for (int party = 0; party < 3; ++party) out.single[party][idx[party]] += p;
        for (std::size_t q = 0; q < kPairs.size(); ++q) {
          out.pair[q][idx[kPairs[q][0]]][idx[kPairs[q][1]]] += p;
        }
      }
    }
  }
  return out;
}

}  // namespace ghz
