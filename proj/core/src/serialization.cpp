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

#include "ghzlhv/serialization.hpp"

#include <cstdlib>
#include <ostream>

#include "ghzlhv/grid_io.hpp"
#include "json.hpp"

namespace ghz {
namespace {

using Json = nlohmann::ordered_json;

double round12(double x) { return std::strtod(format_angle(x).c_str(), nullptr); }

Json angle_list(const std::vector<double>& angles) {
  Json out = Json::array();
  for (double a : angles) out.push_back(round12(a));
  return out;
}

Json grid_angles(const SettingsGrid& grid) {
  Json out = Json::array();
  for (std::size_t p = 0; p < grid.party_count(); ++p) {
    out.push_back(angle_list(grid.angles(p)));
  }
  return out;
}

Json config_json(const SimplexConfig& c) {
  return Json{{"reflection", c.reflection},
              {"expansion", c.expansion},
              {"contraction", c.contraction},
              {"shrink", c.shrink},
              {"tolerance", c.tolerance},
              {"max_iterations", c.max_iterations},
              {"restarts", c.restarts},
              {"initial_step", c.initial_step}};
}

Json strategy_json(const StrategyBasis& basis, std::size_t column) {
  const StrategyEnumeration e(basis.dims, 63);
  const auto s = e.at(basis.representative[column]);
  Json out = Json::array();
  for (const auto& party : s.assignments) {
    Json row = Json::array();
    for (auto v : party) row.push_back(static_cast<int>(v));
    out.push_back(std::move(row));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const OptimizationReport& report) {
  Json j;
  j["kind"] = "optimize";
  j["counts"] = report.counts;
  j["seed"] = report.config.seed;
  j["config"] = config_json(report.config);
  j["best_v"] = report.best_v;
  j["best_restart"] = report.best_restart;
  j["best_angles"] = grid_angles(report.best_grid);
  j["lp_solves"] = report.lp_solves;
  Json restarts = Json::array();
  for (std::size_t r = 0; r < report.restarts.size(); ++r) {
    const auto& rec = report.restarts[r];
    restarts.push_back(Json{{"index", r},
                            {"start", angle_list(rec.start)},
                            {"end", angle_list(rec.end)},
                            {"end_value", rec.end_value},
                            {"iterations", rec.iterations},
                            {"evaluations", rec.evaluations},
                            {"converged", rec.converged}});
  }
  j["restarts"] = std::move(restarts);
  return dump(j);
}

std::string to_json(const ScanReport& report) {
  Json j;
  j["kind"] = "scan";
  j["counts"] = report.counts;
  j["seed"] = report.seed;
  j["samples"] = report.samples;
  j["lp_solves"] = report.lp_solves;
  if (report.values.empty()) {
    j["summary"] = nullptr;
    j["best_sample"] = nullptr;
    j["best_angles"] = nullptr;
  } else {
    const auto& s = report.summary;
    j["summary"] = Json{{"min", s.min}, {"q1", s.q1}, {"median", s.median},
                        {"q3", s.q3}, {"max", s.max}};
    j["best_sample"] = report.best_sample;
    j["best_angles"] = grid_angles(
        SettingsGrid::from_flat_angles(report.best_angles, report.counts));
  }
  j["values"] = report.values;
  return dump(j);
}

std::string to_json(const SettingsGrid& grid, const LpProblem& problem,
                    const LpSolution& solution, bool certificate) {
  Json j;
  j["kind"] = "visibility";
  j["counts"] = grid.counts();
  j["angles"] = grid_angles(grid);
  j["dedup"] = to_string(problem.basis->mode);
  j["columns"] = problem.basis->size();
  j["constraints"] = problem.constraint_count();
  j["status"] = to_string(solution.status);
  j["v_max"] = solution.v_max;
  j["lp_iterations"] = solution.iterations;
  if (certificate) {
    Json mixture = Json::array();
    for (std::size_t k = 0; k < solution.weights.size(); ++k) {
      if (solution.weights[k] <= kCertificateWeightFloor) continue;
      mixture.push_back(Json{{"column", k},
                             {"weight", solution.weights[k]},
                             {"multiplicity", problem.basis->multiplicity[k]},
                             {"strategy", strategy_json(*problem.basis, k)}});
    }
    j["certificate"] = Json{{"mixture", std::move(mixture)},
                            {"duals", solution.duals},
                            {"bound_dual", solution.bound_dual}};
  }
  return dump(j);
}

void write_csv(std::ostream& out, const OptimizationReport& report) {
  const std::size_t dim = report.restarts.empty() ? 0 : report.restarts[0].end.size();
  out << "restart,end_value,iterations,evaluations,converged";
  for (std::size_t i = 0; i < dim; ++i) out << ",angle" << i;
  out << '\n';
  const auto old = out.precision(17);
  for (std::size_t r = 0; r < report.restarts.size(); ++r) {
    const auto& rec = report.restarts[r];
    out << r << ',' << rec.end_value << ',' << rec.iterations << ','
        << rec.evaluations << ',' << (rec.converged ? "true" : "false");
    for (double a : rec.end) out << ',' << format_angle(a);
    out << '\n';
  }
  out.precision(old);
}

void write_csv(std::ostream& out, const ScanReport& report) {
  out << "sample,v_max\n";
  const auto old = out.precision(17);
  for (std::size_t s = 0; s < report.values.size(); ++s) {
    out << s << ',' << report.values[s] << '\n';
  }
  out.precision(old);
}

void write_csv(std::ostream& out, const SettingsGrid& grid,
               const LpProblem& problem, const LpSolution& solution,
               bool certificate) {
  const auto old = out.precision(17);
  out << "counts,status,v_max,lp_iterations,columns,constraints\n";
  for (std::size_t p = 0; p < grid.party_count(); ++p) {
    out << (p ? " " : "") << grid.counts()[p];
  }
  out << ',' << to_string(solution.status) << ',' << solution.v_max << ','
      << solution.iterations << ',' << problem.basis->size() << ','
      << problem.constraint_count() << '\n';
  if (certificate) {
    out << "\ncolumn,weight,multiplicity\n";
    for (std::size_t k = 0; k < solution.weights.size(); ++k) {
      if (solution.weights[k] <= kCertificateWeightFloor) continue;
      out << k << ',' << solution.weights[k] << ','
          << problem.basis->multiplicity[k] << '\n';
    }
  }
  out.precision(old);
}

}  // namespace ghz
