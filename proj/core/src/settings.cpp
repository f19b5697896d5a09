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

#include "ghzlhv/settings.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ghzlhv/errors.hpp"

namespace ghz {

std::array<double, 3> AnalyzerDirection::unit_vector() const {
  // Equatorial directions get an exact zero third component; cos(pi/2) in
  // double precision is 6e-17, not 0.
  if (is_coplanar()) return {std::cos(phi), std::sin(phi), 0.0};
  const double s = std::sin(theta);
  return {std::cos(phi) * s, std::sin(phi) * s, std::cos(theta)};
}

Visibility::Visibility(double v) : v_(v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InputError("visibility must lie in [0, 1], got " + std::to_string(v));
  }
}

void validate_counts(std::span<const std::size_t> counts) {
  if (counts.size() < 2) {
    throw InputError("a settings grid needs at least 2 parties, got " +
                     std::to_string(counts.size()));
  }
  for (std::size_t p = 0; p < counts.size(); ++p) {
    if (counts[p] == 0) {
      throw InputError("party " + std::to_string(p + 1) +
                       " has no analyzer settings");
    }
  }
}

SettingsGrid::SettingsGrid(std::vector<std::vector<AnalyzerDirection>> parties,
                           bool coplanar)
    : parties_(std::move(parties)), coplanar_(coplanar) {
  validate_counts(counts());
  for (std::size_t p = 0; p < parties_.size(); ++p) {
    for (const auto& d : parties_[p]) {
      if (!std::isfinite(d.theta) || !std::isfinite(d.phi)) {
        throw InputError("party " + std::to_string(p + 1) +
                         " has a non-finite angle");
      }
      if (coplanar_ && !d.is_coplanar()) {
        throw InputError("grid flagged coplanar but party " +
                         std::to_string(p + 1) + " has theta != pi/2");
      }
    }
  }
}

SettingsGrid SettingsGrid::from_angles(
    const std::vector<std::vector<double>>& angles) {
  std::vector<std::vector<AnalyzerDirection>> parties;
  parties.reserve(angles.size());
  for (const auto& list : angles) {
    auto& dirs = parties.emplace_back();
    dirs.reserve(list.size());
    for (double a : list) dirs.push_back(AnalyzerDirection::coplanar(a));
  }
  return SettingsGrid(std::move(parties), true);
}

SettingsGrid SettingsGrid::from_flat_angles(std::span<const double> angles,
                                            std::span<const std::size_t> counts) {
  validate_counts(counts);
  const std::size_t total = std::accumulate(counts.begin(), counts.end(),
                                            std::size_t{0});
  if (angles.size() != total) {
    throw InputError("expected " + std::to_string(total) + " angles, got " +
                     std::to_string(angles.size()));
  }
  std::vector<std::vector<AnalyzerDirection>> parties(counts.size());
  std::size_t k = 0;
  for (std::size_t p = 0; p < counts.size(); ++p) {
    parties[p].reserve(counts[p]);
    for (std::size_t i = 0; i < counts[p]; ++i) {
      parties[p].push_back(AnalyzerDirection::coplanar(angles[k++]));
    }
  }
  return SettingsGrid(std::move(parties), true);
}

std::vector<std::size_t> SettingsGrid::counts() const {
  std::vector<std::size_t> out;
  out.reserve(parties_.size());
  for (const auto& p : parties_) out.push_back(p.size());
  return out;
}

std::size_t SettingsGrid::total_settings() const {
  std::size_t n = 0;
  for (const auto& p : parties_) n += p.size();
  return n;
}

std::vector<double> SettingsGrid::angles(std::size_t p) const {
  std::vector<double> out;
  for (const auto& d : parties_.at(p)) out.push_back(d.phi);
  return out;
}

std::vector<double> SettingsGrid::flat_angles() const {
  std::vector<double> out;
  out.reserve(total_settings());
  for (const auto& party : parties_) {
    for (const auto& d : party) out.push_back(d.phi);
  }
  return out;
}

SettingsGrid SettingsGrid::subgrid(
    const std::vector<std::vector<std::size_t>>& picks) const {
  if (picks.size() != parties_.size()) {
    throw InputError("subgrid needs one index list per party");
  }
  std::vector<std::vector<AnalyzerDirection>> parties(picks.size());
  for (std::size_t p = 0; p < picks.size(); ++p) {
    for (std::size_t i : picks[p]) parties[p].push_back(parties_[p].at(i));
  }
  return SettingsGrid(std::move(parties), coplanar_);
}

SettingsGrid mermin_grid() {
  return SettingsGrid::from_angles(
      {{0.0, kHalfPi}, {0.0, kHalfPi}, {0.0, kHalfPi}});
}

SettingsGrid five_setting_grid() {
  const double e = kPi / 8.0;
  const std::vector<double> a{0.0, e, 2 * e, 3 * e, 4 * e};
  const std::vector<double> b{-2 * e, -e, 0.0, e, 2 * e};
  return SettingsGrid::from_angles({a, b, b});
}

SettingsGrid chsh_grid() {
  return SettingsGrid::from_angles({{0.0, kHalfPi}, {-kPi / 4, kPi / 4}});
}

}  // namespace ghz
