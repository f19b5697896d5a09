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

#ifndef GHZLHV_TESTS_UNIT_SUPPORT_HPP
#define GHZLHV_TESTS_UNIT_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ghzlhv/settings.hpp"

namespace testing {

// Hand-rolled generator for property tests; fixed seeds keep runs stable.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  double angle() { return uniform(-2.0 * ghz::kPi, 2.0 * ghz::kPi); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  int sign() { return index(0, 1) ? 1 : -1; }

  std::vector<std::vector<double>> angles(const std::vector<std::size_t>& counts) {
    std::vector<std::vector<double>> out;
    for (auto c : counts) {
      auto& party = out.emplace_back();
      for (std::size_t i = 0; i < c; ++i) party.push_back(angle());
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing

#endif  // GHZLHV_TESTS_UNIT_SUPPORT_HPP
