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

#include "ghzlhv/random.hpp"

#include "ghzlhv/settings.hpp"

namespace ghz {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

AngleSampler::AngleSampler(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed ^ (stream * 0xD1B54A32D192ED03ull);
  engine_.seed(splitmix64(state));
}

double AngleSampler::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double AngleSampler::angle() { return 2.0 * kPi * uniform01(); }

std::vector<double> AngleSampler::angles(std::size_t n) {
  std::vector<double> out(n);
  for (auto& a : out) a = angle();
  return out;
}

}  // namespace ghz
