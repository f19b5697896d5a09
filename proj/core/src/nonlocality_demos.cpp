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

#include "ghzlhv/nonlocality_demos.hpp"

#include <cmath>

#include "ghzlhv/errors.hpp"
#include "ghzlhv/settings.hpp"

namespace ghz {

int chsh_combination(const ChshAssignment& x) {
  for (int v : {x.a1, x.a2, x.b1, x.b2}) {
    if (v != 1 && v != -1) throw InputError("CHSH outcomes must be +1 or -1");
  }
  return x.a1 * x.b1 + x.a1 * x.b2 + x.a2 * x.b1 - x.a2 * x.b2;
}

std::vector<ChshAssignment> all_chsh_assignments() {
  std::vector<ChshAssignment> out;
  for (int k = 0; k < 16; ++k) {
    auto bit = [k](int b) { return ((k >> b) & 1) ? -1 : 1; };
    out.push_back({bit(3), bit(2), bit(1), bit(0)});
  }
  return out;
}

ChshCheck chsh_bound_check(double e11, double e12, double e21, double e22) {
  const double s = e11 + e12 + e21 - e22;
  return {s, s >= -2.0 && s <= 2.0};
}

ChshCheck quantum_chsh() {
  const double a[2] = {0.0, kHalfPi};
  const double b[2] = {-kPi / 4, kPi / 4};
  auto e = [&](int i, int j) { return std::cos(a[i] + b[j]); };
  return chsh_bound_check(e(0, 0), e(0, 1), e(1, 0), e(1, 1));
}

double ghz_sin_correlation(double phi_a, double phi_b, double phi_c) {
  return std::sin(phi_a + phi_b + phi_c);
}

namespace {

double angle_of(ParadoxSetting s) {
  return s == ParadoxSetting::kHalfPi ? kHalfPi : 0.0;
}

// The settings below are perfect-correlation points, so the sine is +/-1 up
// to rounding; anything else is a programming error.
int perfect_correlation(const std::array<ParadoxSetting, 3>& s) {
  const double e = ghz_sin_correlation(angle_of(s[0]), angle_of(s[1]), angle_of(s[2]));
  const long v = std::lround(e);
  if ((v != 1 && v != -1) || std::abs(e - static_cast<double>(v)) > 1e-12) {
    throw SolverError("paradox settings are not a perfect correlation");
  }
  return static_cast<int>(v);
}

}  // namespace

ParadoxRecord ghz_paradox() {
  using S = ParadoxSetting;
  ParadoxRecord rec;
  const std::array<std::array<S, 3>, 3> premises{{
      {S::kHalfPi, S::kZero, S::kZero},
      {S::kZero, S::kZero, S::kHalfPi},
      {S::kZero, S::kHalfPi, S::kZero},
  }};
  for (std::size_t i = 0; i < premises.size(); ++i) {
    rec.premises[i] = {premises[i], perfect_correlation(premises[i])};
  }
  const std::array<S, 3> all_half{S::kHalfPi, S::kHalfPi, S::kHalfPi};
  rec.quantum = {all_half, perfect_correlation(all_half)};

  // Multiplying the premises side by side, every X(0) appears twice and
  // squares to one, leaving A(pi/2) B(pi/2) C(pi/2).
  rec.derived_product = 1;
  for (const auto& p : rec.premises) rec.derived_product *= p.product;

  // values[party][setting], enumerated over all 2^6 sign patterns.
  rec.total_assignments = 64;
  for (int k = 0; k < 64; ++k) {
    int values[3][2];
    for (int party = 0; party < 3; ++party) {
      for (int s = 0; s < 2; ++s) {
        values[party][s] = ((k >> (2 * party + s)) & 1) ? -1 : 1;
      }
    }
    auto holds = [&](const ParadoxConstraint& c) {
      int prod = 1;
      for (int party = 0; party < 3; ++party) {
        prod *= values[party][static_cast<int>(c.settings[party])];
      }
      return prod == c.product;
    };
    bool premises_hold = true;
    for (const auto& p : rec.premises) premises_hold = premises_hold && holds(p);
    if (premises_hold) {
      ++rec.premise_solutions;
      const int triple = values[0][1] * values[1][1] * values[2][1];
      if (triple == rec.derived_product) ++rec.premise_solutions_matching;
    }
    if (premises_hold && holds(rec.quantum)) ++rec.satisfying_assignments;
  }
  return rec;
}

}  // namespace ghz
