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

#ifndef GHZLHV_SIMPLEX_SOLVER_HPP
#define GHZLHV_SIMPLEX_SOLVER_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace ghz {

/// A linear program in standard form
///
///   minimize c^T x  subject to  A x = b,  x >= 0
///
/// exposed column by column so large +/-1 matrices need not be stored as
/// doubles.
class StandardFormLp {
 public:
  virtual ~StandardFormLp() = default;

  virtual std::size_t rows() const = 0;
  virtual std::size_t cols() const = 0;
  virtual double cost(std::size_t j) const = 0;
  virtual double rhs(std::size_t i) const = 0;
  /// Writes column j of A into `out` (size rows()).
  virtual void column(std::size_t j, std::span<double> out) const = 0;
  /// y^T A_j.
  virtual double dot_column(std::size_t j, std::span<const double> y) const = 0;
};

/// Row-major dense standard-form LP, mostly for tests and small problems.
class DenseLp final : public StandardFormLp {
 public:
  DenseLp(std::size_t rows, std::size_t cols, std::vector<double> a,
          std::vector<double> b, std::vector<double> c);

  std::size_t rows() const override { return rows_; }
  std::size_t cols() const override { return cols_; }
  double cost(std::size_t j) const override { return c_[j]; }
  double rhs(std::size_t i) const override { return b_[i]; }
  void column(std::size_t j, std::span<double> out) const override;
  double dot_column(std::size_t j, std::span<const double> y) const override;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> a_;
  std::vector<double> b_;
  std::vector<double> c_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* to_string(LpStatus status);

struct SimplexOptions {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-7;
  std::size_t max_iterations = 200000;
  std::size_t refactor_interval = 64;
  /// Consecutive degenerate pivots tolerated before switching from Dantzig
  /// pricing to Bland's rule. Any non-degenerate pivot switches back.
  std::size_t bland_after = 1000;
};

struct SimplexResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  /// Simplex multipliers y = c_B^T B^-1. At optimality c_j - y^T A_j >= 0.
  std::vector<double> duals;
  double objective = 0.0;
  std::size_t iterations = 0;
  std::size_t phase1_iterations = 0;
  std::size_t bland_pivots = 0;
};

/// Two-phase revised simplex with an explicit basis inverse.
///
/// Phase 1 starts from artificial columns (unit structural columns are used
/// where available) and minimizes their sum; artificials left basic at zero on
/// redundant rows stay pinned through phase 2. Rows with negative b are
/// negated internally; reported duals refer to the original rows.
SimplexResult solve_simplex(const StandardFormLp& lp,
                            const SimplexOptions& opts = {});

}  // namespace ghz

#endif  // GHZLHV_SIMPLEX_SOLVER_HPP
