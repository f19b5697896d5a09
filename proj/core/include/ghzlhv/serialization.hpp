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

#ifndef GHZLHV_SERIALIZATION_HPP
#define GHZLHV_SERIALIZATION_HPP

#include <iosfwd>
#include <string>

#include "ghzlhv/lp.hpp"
#include "ghzlhv/optimizer.hpp"
#include "ghzlhv/settings.hpp"

namespace ghz {

// Structured output. JSON objects keep a fixed key order and contain no
// timing or host information, so equal inputs give byte-identical text.
// Angles are written with 12 significant digits.

/// {"kind": "optimize", "counts", "seed", "config", "best_v", "best_restart",
///  "best_angles", "lp_solves", "restarts": [{"index", "start", "end",
///  "end_value", "iterations", "evaluations", "converged"}]}
std::string to_json(const OptimizationReport& report);

/// {"kind": "scan", "counts", "seed", "samples", "lp_solves", "summary":
///  {"min", "q1", "median", "q3", "max"}, "best_sample", "best_angles",
///  "values"}. Summary and best fields are null when samples == 0.
std::string to_json(const ScanReport& report);

/// {"kind": "visibility", "counts", "angles", "dedup", "columns",
///  "constraints", "status", "v_max", "lp_iterations"} plus, when
/// `certificate` is set, "certificate": {"mixture": [{"column", "weight",
/// "multiplicity", "strategy"}], "duals", "bound_dual"}.
std::string to_json(const SettingsGrid& grid, const LpProblem& problem,
                    const LpSolution& solution, bool certificate);

void write_csv(std::ostream& out, const OptimizationReport& report);
void write_csv(std::ostream& out, const ScanReport& report);
void write_csv(std::ostream& out, const SettingsGrid& grid,
               const LpProblem& problem, const LpSolution& solution,
               bool certificate);

/// Weights below this are left out of certificate listings.
inline constexpr double kCertificateWeightFloor = 1e-12;

}  // namespace ghz

#endif  // GHZLHV_SERIALIZATION_HPP
