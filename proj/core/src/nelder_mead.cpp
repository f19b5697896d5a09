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

#include "ghzlhv/nelder_mead.hpp"

#include <algorithm>
#include <numeric>

#include "ghzlhv/errors.hpp"

namespace ghz {

void SimplexConfig::validate() const {
  if (!(reflection > 0.0)) throw InputError("reflection coefficient must be > 0");
  if (!(expansion > 1.0)) throw InputError("expansion coefficient must be > 1");
  if (!(contraction > 0.0 && contraction < 1.0)) {
    throw InputError("contraction coefficient must lie in (0, 1)");
  }
  if (!(shrink > 0.0 && shrink < 1.0)) {
    throw InputError("shrink coefficient must lie in (0, 1)");
  }
  if (!(tolerance > 0.0)) throw InputError("tolerance must be > 0");
  if (restarts < 1) throw InputError("restarts must be >= 1");
  if (!(initial_step > 0.0)) throw InputError("initial step must be > 0");
}

namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

}  // namespace

NelderMeadResult nelder_mead(const Objective& objective,
                             std::span<const double> start,
                             const SimplexConfig& cfg) {
  cfg.validate();
  const std::size_t n = start.size();
  if (n == 0) throw InputError("nelder_mead needs at least one dimension");

  NelderMeadResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return objective(x);
  };

  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);
  simplex.push_back({std::vector<double>(start.begin(), start.end()), 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    auto x = simplex.front().x;
    x[i] += cfg.initial_step;
    simplex.push_back({std::move(x), 0.0});
  }
  for (auto& v : simplex) v.f = eval(v.x);

  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  auto along = [&](std::vector<double>& out, const std::vector<double>& from,
                   const std::vector<double>& to, double t) {
    for (std::size_t i = 0; i < n; ++i) out[i] = from[i] + t * (to[i] - from[i]);
  };
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };

  while (true) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    if (simplex.back().f - simplex.front().f < cfg.tolerance) {
      result.converged = true;
      break;
    }
    if (result.iterations >= cfg.max_iterations) break;
    ++result.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k].x[i];
    }
    for (auto& c : centroid) c /= static_cast<double>(n);

    Vertex& worst = simplex[n];
    const double f_best = simplex.front().f;
    const double f_second = simplex[n - 1].f;

    along(xr, centroid, worst.x, -cfg.reflection);
    const double fr = eval(xr);

    if (fr < f_best) {
      along(xe, centroid, xr, cfg.expansion);
      const double fe = eval(xe);
      if (fe < fr) {
        worst = {xe, fe};
      } else {
        worst = {xr, fr};
      }
      continue;
    }
    if (fr < f_second) {
      worst = {xr, fr};
      continue;
    }

    bool accepted = false;
    if (fr < worst.f) {
      along(xc, centroid, xr, cfg.contraction);
      const double fc = eval(xc);
      if (fc <= fr) {
        worst = {xc, fc};
        accepted = true;
      }
    } else {
      along(xc, centroid, worst.x, cfg.contraction);
      const double fc = eval(xc);
      if (fc < worst.f) {
        worst = {xc, fc};
        accepted = true;
      }
    }
    if (accepted) continue;

    const auto& best = simplex.front().x;
    for (std::size_t k = 1; k <= n; ++k) {
      along(simplex[k].x, best, simplex[k].x, cfg.shrink);
      simplex[k].f = eval(simplex[k].x);
    }
  }

  result.argmin = simplex.front().x;
  result.value = simplex.front().f;
  return result;
}

}  // namespace ghz
