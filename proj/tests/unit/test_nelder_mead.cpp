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

#include <cmath>

#include "doctest.h"
#include "ghzlhv/errors.hpp"
#include "ghzlhv/nelder_mead.hpp"
#include "ghzlhv/optimizer.hpp"
#include "support.hpp"

using namespace ghz;

TEST_SUITE("nelder_mead") {

TEST_CASE("2D quadratic") {
  const Objective f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + (x[1] + 2.0) * (x[1] + 2.0);
  };
  SimplexConfig cfg;
  cfg.tolerance = 1e-12;
  const std::vector<double> start{0.0, 0.0};
  const auto r = nelder_mead(f, start, cfg);
  CHECK(r.converged);
  CHECK(std::abs(r.argmin[0] - 1.0) <= 1e-4);
  CHECK(std::abs(r.argmin[1] + 2.0) <= 1e-4);
  CHECK(r.value <= 1e-8);
}

TEST_CASE("default tolerance lands near the minimum") {
  const Objective f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + (x[1] + 2.0) * (x[1] + 2.0);
  };
  const std::vector<double> start{0.0, 0.0};
  const auto r = nelder_mead(f, start, SimplexConfig{});
  CHECK(r.converged);
  CHECK(r.value <= 1e-5);
  CHECK(std::hypot(r.argmin[0] - 1.0, r.argmin[1] + 2.0) <= 5e-3);
}

TEST_CASE("Rosenbrock") {
  const Objective f = [](std::span<const double> x) {
    const double a = 1.0 - x[0];
    const double b = x[1] - x[0] * x[0];
    return a * a + 100.0 * b * b;
  };
  SimplexConfig cfg;
  cfg.tolerance = 1e-14;
  cfg.max_iterations = 5000;
  const std::vector<double> start{-1.2, 1.0};
  const auto r = nelder_mead(f, start, cfg);
  CHECK(std::abs(r.argmin[0] - 1.0) <= 1e-3);
  CHECK(std::abs(r.argmin[1] - 1.0) <= 1e-3);
}

TEST_CASE("iteration cap") {
  const Objective f = [](std::span<const double> x) { return x[0] * x[0]; };
  SimplexConfig cfg;
  cfg.max_iterations = 3;
  cfg.tolerance = 1e-300;
  const std::vector<double> start{5.0};
  const auto r = nelder_mead(f, start, cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 3);
  CHECK(r.value < 25.0);
}

TEST_CASE("never returns worse than the start") {
  testing::Gen gen(61);
  for (int i = 0; i < 30; ++i) {
    const double a = gen.uniform(0.5, 3.0);
    const double c0 = gen.uniform(-2.0, 2.0);
    const Objective f = [&](std::span<const double> x) {
      double s = 0.0;
      for (double v : x) s += a * std::cos(v - c0) + 0.1 * v * v;
      return s;
    };
    std::vector<double> start{gen.uniform(-3, 3), gen.uniform(-3, 3), gen.uniform(-3, 3)};
    const auto r = nelder_mead(f, start, SimplexConfig{});
    CHECK(r.value <= f(start));
    CHECK(r.value == f(r.argmin));
  }
}

TEST_CASE("config validation") {
  SimplexConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  for (auto mutate : std::vector<void (*)(SimplexConfig&)>{
           [](SimplexConfig& c) { c.reflection = 0.0; },
           [](SimplexConfig& c) { c.expansion = 1.0; },
           [](SimplexConfig& c) { c.contraction = 1.0; },
           [](SimplexConfig& c) { c.shrink = 0.0; },
           [](SimplexConfig& c) { c.tolerance = 0.0; },
           [](SimplexConfig& c) { c.restarts = 0; },
           [](SimplexConfig& c) { c.initial_step = -1.0; }}) {
    SimplexConfig bad;
    mutate(bad);
    CHECK_THROWS_AS(bad.validate(), InputError);
  }
  const Objective f = [](std::span<const double> x) { return x[0]; };
  CHECK_THROWS_AS(nelder_mead(f, std::vector<double>{}, cfg), InputError);
}

TEST_CASE("starting at the Mermin grid stays at one half") {
  const std::vector<std::size_t> counts{2, 2, 2};
  const VisibilityObjective objective(counts, {});
  const std::vector<double> start{0.0, kHalfPi, 0.0, kHalfPi, 0.0, kHalfPi};
  CHECK(objective(start) == doctest::Approx(0.5).epsilon(1e-9));
  const auto r = nelder_mead(std::cref(objective), start, SimplexConfig{});
  CHECK(r.value <= 0.5 + 1e-9);
  CHECK(r.value >= 0.5 - 1e-6);
}

}  // TEST_SUITE
