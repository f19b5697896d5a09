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

#include <array>
#include <cmath>
#include <cstdint>
#include <set>

#include "doctest.h"
#include "ghzlhv/errors.hpp"
#include "ghzlhv/nonlocality_demos.hpp"
#include "ghzlhv/quantum_model.hpp"
#include "ghzlhv/random.hpp"

using namespace ghz;

TEST_SUITE("nonlocality_demos") {

TEST_CASE("every deterministic CHSH assignment gives +/-2") {
  const auto all = all_chsh_assignments();
  REQUIRE(all.size() == 16);
  int plus = 0;
  for (const auto& x : all) {
    const int s = chsh_combination(x);
    CHECK((s == 2 || s == -2));
    if (s == 2) ++plus;
    // Direct expansion.
    CHECK(s == x.a1 * (x.b1 + x.b2) + x.a2 * (x.b1 - x.b2));
  }
  CHECK(plus == 8);
  CHECK(all.front().a1 == 1);
  CHECK(all[8].a1 == -1);
  CHECK(all[8].a2 == 1);
  CHECK(all[1].b2 == -1);
  CHECK_THROWS_AS(chsh_combination({1, 0, 1, 1}), InputError);
}

TEST_CASE("CHSH bound check") {
  CHECK(chsh_bound_check(1, 1, 1, -1).s == 4.0);
  CHECK_FALSE(chsh_bound_check(1, 1, 1, -1).satisfied);
  CHECK(chsh_bound_check(1, 1, 1, 1).satisfied);
  CHECK(chsh_bound_check(0.5, 0.5, 0.5, -0.5).satisfied);
  const auto q = quantum_chsh();
  CHECK(q.s == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK_FALSE(q.satisfied);
}

TEST_CASE("quantum CHSH matches the two-party correlation at the CHSH grid") {
  const auto t = correlation_tensor(chsh_grid(), Visibility::pure());
  const double s = t.values()[0] + t.values()[1] + t.values()[2] - t.values()[3];
  CHECK(std::abs(s - quantum_chsh().s) <= 1e-12);
}

TEST_CASE("sine correlation is cosine shifted by a quarter turn") {
  AngleSampler sampler(3, 0);
  for (int i = 0; i < 200; ++i) {
    const double a = sampler.angle(), b = sampler.angle(), c = sampler.angle();
    CHECK(std::abs(ghz_sin_correlation(a, b, c) -
                   correlation(std::vector<double>{a - kHalfPi, b, c}, Visibility::pure())) <=
          1e-12);
  }
}

TEST_CASE("GHZ paradox") {
  const auto r = ghz_paradox();
  for (const auto& p : r.premises) CHECK(p.product == 1);
  std::set<std::array<ParadoxSetting, 3>> seen;
  for (const auto& p : r.premises) {
    int half = 0;
    for (auto s : p.settings) half += s == ParadoxSetting::kHalfPi;
    CHECK(half == 1);
    seen.insert(p.settings);
  }
  CHECK(seen.size() == 3);
  for (auto s : r.quantum.settings) CHECK(s == ParadoxSetting::kHalfPi);
  CHECK(r.quantum.product == -1);
  CHECK(r.derived_product == 1);
  CHECK(r.contradiction());
  CHECK(r.total_assignments == 64);
  CHECK(r.satisfying_assignments == 0);
  CHECK(r.premise_solutions == 8);
  CHECK(r.premise_solutions_matching == r.premise_solutions);
}

TEST_CASE("paradox premises agree with the sine correlation") {
  const auto r = ghz_paradox();
  auto angle = [](ParadoxSetting s) { return s == ParadoxSetting::kHalfPi ? kHalfPi : 0.0; };
  for (const auto& p : r.premises) {
    CHECK(ghz_sin_correlation(angle(p.settings[0]), angle(p.settings[1]),
                              angle(p.settings[2])) == doctest::Approx(p.product));
  }
  CHECK(ghz_sin_correlation(kHalfPi, kHalfPi, kHalfPi) == doctest::Approx(r.quantum.product));
}

}  // TEST_SUITE
