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

#ifndef GHZLHV_NONLOCALITY_DEMOS_HPP
#define GHZLHV_NONLOCALITY_DEMOS_HPP

#include <array>
#include <span>
#include <vector>

namespace ghz {

/// Predetermined outcomes of two observers with two settings each.
struct ChshAssignment {
  int a1 = 1;
  int a2 = 1;
  int b1 = 1;
  int b2 = 1;
};

/// a1 b1 + a1 b2 + a2 b1 - a2 b2, always +2 or -2. Throws InputError on
/// values other than +1/-1.
int chsh_combination(const ChshAssignment& x);

/// All 16 assignments, a1 the most significant bit (clear bit = +1).
std::vector<ChshAssignment> all_chsh_assignments();

struct ChshCheck {
  double s = 0.0;
  bool satisfied = true;
};

/// S = E11 + E12 + E21 - E22 and whether -2 <= S <= 2.
ChshCheck chsh_bound_check(double e11, double e12, double e21, double e22);

/// Quantum CHSH value at the optimal settings a in {0, pi/2},
/// b in {-pi/4, pi/4} for correlations cos(a + b): 2 sqrt 2.
ChshCheck quantum_chsh();

/// sin(phiA + phiB + phiC): the three-particle correlation for observables
/// whose eigenstates carry a relative +/-i phase.
double ghz_sin_correlation(double phi_a, double phi_b, double phi_c);

/// Local settings in the perfect-correlation argument.
enum class ParadoxSetting { kZero = 0, kHalfPi = 1 };

struct ParadoxConstraint {
  std::array<ParadoxSetting, 3> settings;
  /// +1 or -1, read off the sine correlation at these settings.
  int product;
};

struct ParadoxRecord {
  /// The three perfect correlations multiplied together.
  std::array<ParadoxConstraint, 3> premises;
  /// The all-pi/2 perfect correlation.
  ParadoxConstraint quantum;
  /// Product of the premises, simplified with X(0)^2 = 1: the value local
  /// realism assigns to A(pi/2) B(pi/2) C(pi/2).
  int derived_product = 0;
  /// Assignments satisfying the three premises, and how many of them give
  /// A(pi/2) B(pi/2) C(pi/2) == derived_product (all of them, by algebra).
  int premise_solutions = 0;
  int premise_solutions_matching = 0;
  /// Assignments of +/-1 to {A, B, C} x {0, pi/2} satisfying all four.
  int satisfying_assignments = 0;
  int total_assignments = 0;

  bool contradiction() const { return derived_product != quantum.product; }
};

ParadoxRecord ghz_paradox();

}  // namespace ghz

#endif  // GHZLHV_NONLOCALITY_DEMOS_HPP
