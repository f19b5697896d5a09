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

#include "ghzlhv/simplex_solver.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ghzlhv/errors.hpp"

namespace ghz {

DenseLp::DenseLp(std::size_t rows, std::size_t cols, std::vector<double> a,
                 std::vector<double> b, std::vector<double> c)
    : rows_(rows), cols_(cols), a_(std::move(a)), b_(std::move(b)),
      c_(std::move(c)) {
  if (a_.size() != rows_ * cols_ || b_.size() != rows_ || c_.size() != cols_) {
    throw InputError("DenseLp: inconsistent dimensions");
  }
}

void DenseLp::column(std::size_t j, std::span<double> out) const {
  for (std::size_t i = 0; i < rows_; ++i) out[i] = a_[i * cols_ + j];
}

double DenseLp::dot_column(std::size_t j, std::span<const double> y) const {
  double s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) s += y[i] * a_[i * cols_ + j];
  return s;
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration-limit";
  }
  return "?";
}

namespace {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

enum class PhaseOutcome { kOptimal, kUnbounded, kIterationLimit };

class RevisedSimplex {
 public:
  RevisedSimplex(const StandardFormLp& lp, const SimplexOptions& opts)
      : lp_(lp), opts_(opts), m_(lp.rows()), n_(lp.cols()) {}

  SimplexResult run() {
    SimplexResult result;
    initialize();

    auto outcome = iterate(1);
    result.phase1_iterations = iterations_;
    if (outcome == PhaseOutcome::kIterationLimit) {
      return finish(LpStatus::kIterationLimit, std::move(result));
    }
    double infeasibility = 0.0;
    double scale = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      scale = std::max(scale, std::abs(b_[i]));
      if (basis_[i] >= n_) infeasibility += std::max(xb_[i], 0.0);
    }
    if (infeasibility > 1e-7 * scale) {
      return finish(LpStatus::kInfeasible, std::move(result));
    }
    drive_out_artificials();

    outcome = iterate(2);
    switch (outcome) {
      case PhaseOutcome::kOptimal:
        return finish(LpStatus::kOptimal, std::move(result));
      case PhaseOutcome::kUnbounded:
        return finish(LpStatus::kUnbounded, std::move(result));
      case PhaseOutcome::kIterationLimit:
        break;
    }
    return finish(LpStatus::kIterationLimit, std::move(result));
  }

 private:
  void initialize() {
    sign_.assign(m_, 1.0);
    b_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const double bi = lp_.rhs(i);
      if (bi < 0) sign_[i] = -1.0;
      b_[i] = sign_[i] * bi;
    }
    basis_.assign(m_, kNone);
    is_basic_.assign(n_ + m_, 0);

    // Crash: a structural unit column can start basic on its row.
    std::vector<double> col(m_);
    for (std::size_t j = 0; j < n_; ++j) {
      lp_.column(j, col);
      std::size_t hit = kNone;
      bool unit = true;
      for (std::size_t i = 0; i < m_ && unit; ++i) {
        const double v = sign_[i] * col[i];
        if (v == 0.0) continue;
        if (v == 1.0 && hit == kNone) {
          hit = i;
        } else {
          unit = false;
        }
      }
      if (unit && hit != kNone && basis_[hit] == kNone) {
        basis_[hit] = j;
        is_basic_[j] = 1;
      }
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] == kNone) {
        basis_[i] = n_ + i;
        is_basic_[n_ + i] = 1;
      }
    }
    refactor();
  }

  void signed_column(std::size_t j, Eigen::VectorXd& out) const {
    out.setZero(static_cast<Eigen::Index>(m_));
    if (j >= n_) {
      out[static_cast<Eigen::Index>(j - n_)] = 1.0;
      return;
    }
    lp_.column(j, std::span<double>(out.data(), m_));
    for (std::size_t i = 0; i < m_; ++i) out[static_cast<Eigen::Index>(i)] *= sign_[i];
  }

  double phase_cost(std::size_t j, int phase) const {
    if (phase == 1) return j >= n_ ? 1.0 : 0.0;
    return j >= n_ ? 0.0 : lp_.cost(j);
  }

  void refactor() {
    const auto m = static_cast<Eigen::Index>(m_);
    Eigen::MatrixXd basis_matrix(m, m);
    Eigen::VectorXd col;
    for (std::size_t i = 0; i < m_; ++i) {
      signed_column(basis_[i], col);
      basis_matrix.col(static_cast<Eigen::Index>(i)) = col;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_matrix);
    if (!lu.isInvertible()) throw SolverError("simplex basis became singular");
    binv_ = lu.inverse();
    xb_ = binv_ * Eigen::Map<const Eigen::VectorXd>(b_.data(), m);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (xb_[i] < 0.0 && xb_[i] > -opts_.feasibility_tol) xb_[i] = 0.0;
    }
    since_refactor_ = 0;
  }

  // Simplex multipliers for the signed rows, already multiplied back by the
  // row signs so they can be dotted with the caller's unsigned columns.
  void compute_duals(int phase) {
    Eigen::VectorXd cb(static_cast<Eigen::Index>(m_));
    for (std::size_t i = 0; i < m_; ++i) {
      cb[static_cast<Eigen::Index>(i)] = phase_cost(basis_[i], phase);
    }
    y_signed_ = binv_.transpose() * cb;
    y_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      y_[i] = y_signed_[static_cast<Eigen::Index>(i)] * sign_[i];
    }
  }

  std::size_t price(int phase) {
    std::size_t entering = kNone;
    double best = -opts_.optimality_tol;
    for (std::size_t j = 0; j < n_; ++j) {
      if (is_basic_[j]) continue;
      const double d = phase_cost(j, phase) - lp_.dot_column(j, y_);
      if (bland_) {
        if (d < -opts_.optimality_tol) return j;
      } else if (d < best) {
        best = d;
        entering = j;
      }
    }
    return entering;
  }

  std::size_t ratio_test(const Eigen::VectorXd& alpha, int phase,
                         double& theta) const {
    std::size_t leave = kNone;
    double best = std::numeric_limits<double>::infinity();
    constexpr double kTie = 1e-12;
    for (std::size_t i = 0; i < m_; ++i) {
      const double a = alpha[static_cast<Eigen::Index>(i)];
      double ratio;
      if (phase == 2 && basis_[i] >= n_) {
        // Artificial pinned at zero on a redundant row.
        if (std::abs(a) <= opts_.pivot_tol) continue;
        ratio = 0.0;
      } else {
        if (a <= opts_.pivot_tol) continue;
        ratio = std::max(xb_[static_cast<Eigen::Index>(i)], 0.0) / a;
      }
      bool take = false;
      if (leave == kNone || ratio < best - kTie) {
        take = true;
      } else if (ratio <= best + kTie) {
        if (bland_) {
          take = basis_[i] < basis_[leave];
        } else {
          take = std::abs(a) > std::abs(alpha[static_cast<Eigen::Index>(leave)]);
        }
      }
      if (take) {
        leave = i;
        best = std::min(best, ratio);
      }
    }
    if (leave != kNone) {
      theta = std::max(xb_[static_cast<Eigen::Index>(leave)], 0.0) /
              alpha[static_cast<Eigen::Index>(leave)];
      if (phase == 2 && basis_[leave] >= n_) theta = 0.0;
    }
    return leave;
  }

  void pivot(std::size_t row, std::size_t entering, const Eigen::VectorXd& alpha,
             double theta) {
    const auto r = static_cast<Eigen::Index>(row);
    xb_ -= theta * alpha;
    xb_[r] = theta;

    const double piv = alpha[r];
    const Eigen::RowVectorXd prow = binv_.row(r) / piv;
    Eigen::VectorXd a = alpha;
    a[r] = piv - 1.0;
    binv_.noalias() -= a * prow;

    is_basic_[basis_[row]] = 0;
    basis_[row] = entering;
    is_basic_[entering] = 1;
    ++since_refactor_;
  }

  PhaseOutcome iterate(int phase) {
    Eigen::VectorXd col;
    std::size_t degenerate_run = 0;
    bland_ = false;
    while (true) {
      if (iterations_ >= opts_.max_iterations) return PhaseOutcome::kIterationLimit;
      if (since_refactor_ >= opts_.refactor_interval) refactor();

      compute_duals(phase);
      const std::size_t q = price(phase);
      if (q == kNone) {
        refactor();
        compute_duals(phase);
        if (price(phase) == kNone) return PhaseOutcome::kOptimal;
        continue;
      }
      signed_column(q, col);
      const Eigen::VectorXd alpha = binv_ * col;
      double theta = 0.0;
      const std::size_t r = ratio_test(alpha, phase, theta);
      if (r == kNone) return PhaseOutcome::kUnbounded;

      pivot(r, q, alpha, theta);
      ++iterations_;
      if (bland_) ++bland_pivots_;
      if (theta <= opts_.feasibility_tol) {
        if (++degenerate_run >= opts_.bland_after) bland_ = true;
      } else {
        degenerate_run = 0;
        bland_ = false;
      }
    }
  }

  void drive_out_artificials() {
    Eigen::VectorXd col;
    std::vector<double> row_dual(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      const auto ri = static_cast<Eigen::Index>(i);
      for (std::size_t k = 0; k < m_; ++k) {
        row_dual[k] = binv_(ri, static_cast<Eigen::Index>(k)) * sign_[k];
      }
      std::size_t best = kNone;
      double best_mag = 1e-7;
      for (std::size_t j = 0; j < n_; ++j) {
        if (is_basic_[j]) continue;
        const double v = std::abs(lp_.dot_column(j, row_dual));
        if (v > best_mag) {
          best_mag = v;
          best = j;
        }
      }
      if (best == kNone) continue;  // redundant row
      signed_column(best, col);
      const Eigen::VectorXd alpha = binv_ * col;
      xb_[ri] = 0.0;
      pivot(i, best, alpha, 0.0);
    }
    refactor();
  }

  SimplexResult finish(LpStatus status, SimplexResult result) {
    refactor();
    result.status = status;
    result.x.assign(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) result.x[basis_[i]] = xb_[static_cast<Eigen::Index>(i)];
    }
    compute_duals(status == LpStatus::kInfeasible ? 1 : 2);
    result.duals = y_;
    result.objective = 0.0;
    for (std::size_t j = 0; j < n_; ++j) result.objective += lp_.cost(j) * result.x[j];
    result.iterations = iterations_;
    result.bland_pivots = bland_pivots_;
    return result;
  }

  const StandardFormLp& lp_;
  SimplexOptions opts_;
  std::size_t m_;
  std::size_t n_;
  std::vector<double> sign_;
  std::vector<double> b_;
  std::vector<std::size_t> basis_;
  std::vector<char> is_basic_;
  RowMatrix binv_;
  Eigen::VectorXd xb_;
  Eigen::VectorXd y_signed_;
  std::vector<double> y_;
  std::size_t iterations_ = 0;
  std::size_t since_refactor_ = 0;
  std::size_t bland_pivots_ = 0;
  bool bland_ = false;
};

}  // namespace

SimplexResult solve_simplex(const StandardFormLp& lp, const SimplexOptions& opts) {
  if (lp.rows() == 0) throw InputError("LP has no constraints");
  return RevisedSimplex(lp, opts).run();
}

}  // namespace ghz
