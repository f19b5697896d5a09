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

#include <benchmark/benchmark.h>

#include <memory>

#include "ghzlhv/lhv_model.hpp"
#include "ghzlhv/lp.hpp"
#include "ghzlhv/nelder_mead.hpp"
#include "ghzlhv/optimizer.hpp"
#include "ghzlhv/random.hpp"
#include "ghzlhv/settings.hpp"

namespace {

using namespace ghz;

void BM_BuildBasis(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const std::vector<std::size_t> counts{k, k, k};
  for (auto _ : state) {
    auto basis = build_basis(counts);
    benchmark::DoNotOptimize(basis.tensors.data());
  }
}
BENCHMARK(BM_BuildBasis)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_SolveRandomGrid(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const std::vector<std::size_t> counts{k, k, k};
  const auto basis = std::make_shared<const StrategyBasis>(build_basis(counts));
  AngleSampler sampler(1, 0);
  const auto grid = SettingsGrid::from_flat_angles(sampler.angles(3 * k), counts);
  const auto problem = build_problem(basis, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_lp(problem).v_max);
  }
}
BENCHMARK(BM_SolveRandomGrid)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SolveMermin(benchmark::State& state) {
  const auto problem = build_problem(mermin_grid());
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(problem).v_max);
}
BENCHMARK(BM_SolveMermin)->Unit(benchmark::kMicrosecond);

void BM_SolveFiveSetting(benchmark::State& state) {
  const auto problem = build_problem(five_setting_grid());
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(problem).v_max);
}
BENCHMARK(BM_SolveFiveSetting)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_RawVersusDedup(benchmark::State& state) {
  const auto mode = state.range(0) ? DedupMode::kNone : DedupMode::kEvenFlips;
  AngleSampler sampler(2, 0);
  const std::vector<std::size_t> counts{3, 3, 3};
  const auto grid = SettingsGrid::from_flat_angles(sampler.angles(9), counts);
  const auto problem = build_problem(grid, {mode});
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(problem).v_max);
}
BENCHMARK(BM_RawVersusDedup)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NelderMeadRestart(benchmark::State& state) {
  const std::vector<std::size_t> counts{2, 2, 2};
  const VisibilityObjective objective(counts, {});
  AngleSampler sampler(1, 0);
  const auto start = sampler.angles(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nelder_mead(std::cref(objective), start, SimplexConfig{}).value);
  }
}
BENCHMARK(BM_NelderMeadRestart)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
