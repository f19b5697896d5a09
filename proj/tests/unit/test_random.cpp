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

#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>

#include "doctest.h"
#include "ghzlhv/random.hpp"
#include "ghzlhv/settings.hpp"

using namespace ghz;

TEST_SUITE("random") {

TEST_CASE("splitmix64 reference outputs") {
  std::uint64_t state = 0;
  CHECK(splitmix64(state) == 0xE220A8397B1DCDAFULL);
  CHECK(state == 0x9E3779B97F4A7C15ULL);
  CHECK(splitmix64(state) == 0x6E789E6AA1B965F4ULL);
  CHECK(splitmix64(state) == 0x06C45D188009454FULL);
}

TEST_CASE("angle streams are reproducible and distinct") {
  AngleSampler a(1, 0), b(1, 0), c(1, 1), d(2, 0);
  const auto xa = a.angles(50);
  CHECK(xa == b.angles(50));
  CHECK(xa != c.angles(50));
  CHECK(xa != d.angles(50));
  for (double x : xa) {
    CHECK(x >= 0.0);
    CHECK(x < 2.0 * kPi);
  }
}

TEST_CASE("uniform01 follows the documented construction") {
  std::uint64_t s = 5 ^ (3 * 0xD1B54A32D192ED03ULL);
  std::mt19937_64 engine(splitmix64(s));
  AngleSampler sampler(5, 3);
  for (int i = 0; i < 10; ++i) {
    CHECK(sampler.uniform01() == static_cast<double>(engine() >> 11) * 0x1.0p-53);
  }
}

TEST_CASE("uniform01 is roughly uniform") {
  AngleSampler sampler(11, 0);
  int bins[10] = {};
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++bins[static_cast<int>(sampler.uniform01() * 10)];
  for (int b : bins) CHECK(std::abs(b - n / 10) < 600);
}

}  // TEST_SUITE
