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

#ifndef GHZLHV_SETTINGS_HPP
#define GHZLHV_SETTINGS_HPP

#include <array>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace ghz {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Direction of a dichotomic qubit observable on the Bloch sphere.
///
/// `theta` is the polar angle in [0, pi] and `phi` the azimuth. Angles are
/// taken as given; periodicity is left to the trigonometric functions.
struct AnalyzerDirection {
  double theta = kHalfPi;
  double phi = 0.0;

  static constexpr AnalyzerDirection coplanar(double phi) {
    return AnalyzerDirection{kHalfPi, phi};
  }

  bool is_coplanar() const { return theta == kHalfPi; }

  /// (cos phi sin theta, sin phi sin theta, cos theta)
  std::array<double, 3> unit_vector() const;

  friend bool operator==(const AnalyzerDirection&,
                         const AnalyzerDirection&) = default;
};

/// White-noise visibility V in [0, 1]; 1 - V is the noise fraction.
class Visibility {
 public:
  /// Throws InputError outside [0, 1] or on NaN.
  explicit Visibility(double v);

  double value() const { return v_; }

  static Visibility pure() { return Visibility(1.0); }

 private:
  double v_;
};

/// Per-party lists of analyzer directions for one correlation experiment.
///
/// Invariants: at least two parties, at least one setting per party, and when
/// the grid is flagged coplanar every theta is exactly pi/2.
class SettingsGrid {
 public:
  SettingsGrid(std::vector<std::vector<AnalyzerDirection>> parties,
               bool coplanar);

  /// Builds a coplanar grid from azimuthal angles, one list per party.
  static SettingsGrid from_angles(
      const std::vector<std::vector<double>>& angles);

  /// Splits a flat angle vector into parties with the given setting counts.
  static SettingsGrid from_flat_angles(std::span<const double> angles,
                                       std::span<const std::size_t> counts);

  std::size_t party_count() const { return parties_.size(); }
  std::vector<std::size_t> counts() const;
  std::size_t total_settings() const;
  bool coplanar() const { return coplanar_; }

  const std::vector<AnalyzerDirection>& party(std::size_t p) const {
    return parties_.at(p);
  }
  const std::vector<std::vector<AnalyzerDirection>>& parties() const {
    return parties_;
  }

  /// Azimuthal angles of party `p`.
  std::vector<double> angles(std::size_t p) const;
  /// All azimuthal angles, party-major.
  std::vector<double> flat_angles() const;

  /// Grid restricted to the chosen setting indices of each party.
  SettingsGrid subgrid(const std::vector<std::vector<std::size_t>>& picks) const;

  friend bool operator==(const SettingsGrid&, const SettingsGrid&) = default;

 private:
  std::vector<std::vector<AnalyzerDirection>> parties_;
  bool coplanar_;
};

/// Validates per-party setting counts (>= 2 parties, every count >= 1).
void validate_counts(std::span<const std::size_t> counts);

/// The two-setting grid {0, pi/2} for every one of three parties.
SettingsGrid mermin_grid();

/// Five settings per party: a in {0, pi/8, pi/4, 3pi/8, pi/2} and
/// b = c in {-pi/4, -pi/8, 0, pi/8, pi/4}.
SettingsGrid five_setting_grid();

/// Two parties, a in {0, pi/2}, b in {-pi/4, pi/4}: the CHSH-optimal angles
/// for correlations cos(a + b).
SettingsGrid chsh_grid();

}  // namespace ghz

#endif  // GHZLHV_SETTINGS_HPP
