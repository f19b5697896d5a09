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

#ifndef GHZLHV_RANDOM_HPP
#define GHZLHV_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace ghz {

/// One step of SplitMix64: advances `state` by 0x9E3779B97F4A7C15 and returns
/// the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Reproducible stream of uniform angles.
///
/// Stream `k` of seed `s` is a std::mt19937_64 seeded with the value obtained
/// by running SplitMix64 from state s ^ (k * 0xD1B54A32D192ED03) once. A
/// uniform double in [0, 1) is (draw >> 11) * 2^-53 and an angle is that
/// value times 2 pi. Both generators are fully specified, so the angle
/// sequences do not depend on the standard library in use.
class AngleSampler {
 public:
  AngleSampler(std::uint64_t seed, std::uint64_t stream);

  double uniform01();
  /// Uniform in [0, 2 pi).
  double angle();
  std::vector<double> angles(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ghz

#endif  // GHZLHV_RANDOM_HPP
