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

#include "ghzlhv/lp.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "ghzlhv/errors.hpp"

namespace ghz {
namespace {

// Standard form of the visibility LP. Rows: tensor entries, normalization,
// V + s = 1. Columns: basis weights, V, the bound slack s.
class VisibilityLp final : public StandardFormLp {
 public:
  explicit VisibilityLp(const LpProblem& p)
      : p_(p), entries_(p.targets.size()), k_(p.basis->size()) {}

  std::size_t rows() const override { return entries_ + 2; }
  std::size_t cols() const override { return k_ + 2; }
  double cost(std::size_t j) const override { return j == k_ ? -1.0 : 0.0; }
  double rhs(std::size_t i) const override { return i < entries_ ? 0.0 : 1.0; }

  void column(std::size_t j, std::span<double> out) const override {
    if (j < k_) {
      const auto& t = p_.basis->tensors[j].values;
      for (std::size_t e = 0; e < entries_; ++e) out[e] = t[e];
      out[entries_] = 1.0;
      out[entries_ + 1] = 0.0;
    } else if (j == k_) {
      for (std::size_t e = 0; e < entries_; ++e) out[e] = -p_.targets[e];
      out[entries_] = 0.0;
      out[entries_ + 1] = 1.0;
    } else {
      for (std::size_t e = 0; e <= entries_; ++e) out[e] = 0.0;
      out[entries_ + 1] = 1.0;
    }
  }

  double dot_column(std::size_t j, std::span<const double> y) const override {
    if (j < k_) {
      const std::int8_t* t = p_.basis->tensors[j].values.data();
      double s = 0.0;
      for (std::size_t e = 0; e < entries_; ++e) s += y[e] * t[e];
      return s + y[entries_];
    }
    if (j == k_) {
      double s = 0.0;
      for (std::size_t e = 0; e < entries_; ++e) s -= y[e] * p_.targets[e];
      return s + y[entries_ + 1];
    }
    return y[entries_ + 1];
  }

 private:
  const LpProblem& p_;
  std::size_t entries_;
  std::size_t k_;
};

}  // namespace

LpProblem build_problem(const SettingsGrid& grid, const BasisOptions& opts) {
  return build_problem(std::make_shared<const StrategyBasis>(build_basis(grid, opts)),
                       grid);
}

LpProblem build_problem(std::shared_ptr<const StrategyBasis> basis,
                        const SettingsGrid& grid) {
  if (!basis || basis->dims != grid.counts()) {
    throw InputError("strategy basis does not match the grid's setting counts");
  }
  LpProblem p;
  p.targets = correlation_tensor(grid, Visibility::pure()).values();
  p.basis = std::move(basis);
  return p;
}

LpSolution solve_lp(const LpProblem& problem, const SimplexOptions& opts) {
  const VisibilityLp lp(problem);
  const SimplexResult r = solve_simplex(lp, opts);
  if (r.status == LpStatus::kInfeasible || r.status == LpStatus::kUnbounded) {
    throw SolverError(std::string("visibility LP reported ") +
                      to_string(r.status) + "; this indicates a solver defect");
  }
  const std::size_t k = problem.basis->size();
  const std::size_t entries = problem.targets.size();

  LpSolution s;
  s.status = r.status;
  s.weights.assign(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(k));
  s.v_max = r.x[k];
  s.duals.resize(entries + 1);
  for (std::size_t i = 0; i <= entries; ++i) s.duals[i] = -r.duals[i];
  s.bound_dual = -r.duals[entries + 1];
  s.iterations = r.iterations;
  return s;
}

LpSolution critical_visibility(const SettingsGrid& grid,
                               const BasisOptions& basis_opts,
                               const SimplexOptions& solver_opts) {
  return solve_lp(build_problem(grid, basis_opts), solver_opts);
}

double mixture_residual(const LpProblem& problem, const LpSolution& solution) {
  const auto& tensors = problem.basis->tensors;
  double worst = 0.0;
  for (std::size_t e = 0; e < problem.targets.size(); ++e) {
    double s = -solution.v_max * problem.targets[e];
    for (std::size_t k = 0; k < tensors.size(); ++k) {
      s += solution.weights[k] * tensors[k].values[e];
    }
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

void write_mps(const LpProblem& problem, std::ostream& out) {
  const auto& tensors = problem.basis->tensors;
  const std::size_t entries = problem.targets.size();
  const auto old_precision = out.precision(17);

  out << "NAME          VISIBILITY\n";
  out << "OBJSENSE\n    MAX\n";
  out << "ROWS\n N  OBJ\n";
  for (std::size_t e = 0; e < entries; ++e) out << " E  E" << e << '\n';
  out << " E  NORM\n";
  out << "COLUMNS\n";
  for (std::size_t k = 0; k < tensors.size(); ++k) {
    for (std::size_t e = 0; e < entries; ++e) {
      out << "    W" << k << "  E" << e << "  "
          << static_cast<int>(tensors[k].values[e]) << '\n';
    }
    out << "    W" << k << "  NORM  1\n";
  }
  out << "    V  OBJ  1\n";
  for (std::size_t e = 0; e < entries; ++e) {
    if (problem.targets[e] != 0.0) {
      out << "    V  E" << e << "  " << -problem.targets[e] << '\n';
    }
  }
  out << "RHS\n    RHS  NORM  1\n";
  out << "BOUNDS\n UP BND  V  1\n";
  out << "ENDATA\n";
  out.precision(old_precision);
}

}  // namespace ghz
