#include "ctxstat/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ctxstat/error.hpp"

namespace ctxstat::lp {
namespace {

class Tableau {
 public:
  Tableau(const LinearSystem& sys, const SimplexOptions& opt)
      : m_(sys.rows), n_(sys.cols), width_(sys.cols + sys.rows + 1), opt_(opt),
        t_(m_ * width_, 0.0), cost_(width_, 0.0), basis_(m_), dead_row_(m_, false) {
    for (std::size_t i = 0; i < m_; ++i) {
      const double sign = sys.b[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = sign * sys.at(i, j);
      at(i, n_ + i) = 1.0;
      rhs(i) = sign * sys.b[i];
      basis_[i] = n_ + i;
    }
    max_iter_ = opt.max_iterations ? opt.max_iterations : 50 * (m_ + n_) + 1000;
  }

  void phase_one() {
    std::fill(cost_.begin(), cost_.end(), 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) cost_[j] -= at(i, j);
      cost_[width_ - 1] -= rhs(i);
    }
    iterate(/*allow_artificial=*/true);
  }

  // Pivot basic artificials out where possible; rows that cannot be pivoted
  // are linearly dependent and get frozen.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t best = n_;
      double best_abs = opt_.pivot_tol;
      for (std::size_t j = 0; j < n_; ++j) {
        if (std::abs(at(i, j)) > best_abs) {
          best_abs = std::abs(at(i, j));
          best = j;
        }
      }
      if (best == n_) {
        dead_row_[i] = true;
      } else {
        pivot(i, best);
      }
    }
  }

  void phase_two(std::span<const double> objective) {
    std::fill(cost_.begin(), cost_.end(), 0.0);
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = objective[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t bj = basis_[i];
      const double cb = bj < n_ ? objective[bj] : 0.0;
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) cost_[j] -= cb * at(i, j);
    }
    iterate(/*allow_artificial=*/false);
  }

  std::vector<double> solution() const {
    std::vector<double> x(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = std::max(0.0, rhs(i));
    }
    return x;
  }

  std::size_t iterations() const { return iterations_; }

 private:
  double& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }
  double& rhs(std::size_t i) { return at(i, width_ - 1); }
  double rhs(std::size_t i) const { return at(i, width_ - 1); }

  void iterate(bool allow_artificial) {
    const std::size_t ncols = allow_artificial ? n_ + m_ : n_;
    std::size_t degenerate_run = 0;
    bool bland = false;
    for (;;) {
      if (iterations_ >= max_iter_) {
        throw Error(ErrorKind::SolverFailure, "simplex iteration limit reached");
      }
      // Entering column.
      std::size_t enter = ncols;
      double best = -opt_.pivot_tol;
      for (std::size_t j = 0; j < ncols; ++j) {
        if (cost_[j] < best) {
          enter = j;
          if (bland) break;
          best = cost_[j];
        }
      }
      if (enter == ncols) return;

      // Ratio test; ties broken by smallest basic index.
      std::size_t leave = m_;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        if (dead_row_[i]) continue;
        const double coef = at(i, enter);
        if (coef <= opt_.pivot_tol) continue;
        const double ratio = std::max(0.0, rhs(i)) / coef;
        if (ratio < best_ratio - 1e-15 ||
            (ratio <= best_ratio + 1e-15 && leave < m_ && basis_[i] < basis_[leave])) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave == m_) {
        throw Error(ErrorKind::SolverFailure, "unbounded objective");
      }
      if (best_ratio <= 0.0) {
        if (++degenerate_run > 50) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(leave, enter);
      ++iterations_;
      if (!std::isfinite(cost_[width_ - 1])) {
        throw Error(ErrorKind::SolverFailure, "non-finite value in simplex tableau");
      }
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const double inv = 1.0 / at(row, col);
    for (std::size_t j = 0; j < width_; ++j) at(row, j) *= inv;
    at(row, col) = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(row, j);
      at(i, col) = 0.0;
    }
    const double f = cost_[col];
    if (f != 0.0) {
      for (std::size_t j = 0; j < width_; ++j) cost_[j] -= f * at(row, j);
      cost_[col] = 0.0;
    }
    basis_[row] = col;
  }

  std::size_t m_, n_, width_;
  SimplexOptions opt_;
  std::vector<double> t_;
  std::vector<double> cost_;
  std::vector<std::size_t> basis_;
  std::vector<bool> dead_row_;
  std::size_t max_iter_ = 0;
  std::size_t iterations_ = 0;
};

double l1_residual(const LinearSystem& sys, const std::vector<double>& x) {
  double total = 0.0;
  for (std::size_t i = 0; i < sys.rows; ++i) {
    double ax = 0.0;
    for (std::size_t j = 0; j < sys.cols; ++j) ax += sys.at(i, j) * x[j];
    total += std::abs(sys.b[i] - ax);
  }
  return total;
}

}  // namespace

SimplexResult solve(const LinearSystem& system, const SimplexOptions& options,
                    std::span<const double> objective) {
  if (system.a.size() != system.rows * system.cols || system.b.size() != system.rows) {
    throw Error(ErrorKind::InvalidInput, "linear system dimensions are inconsistent");
  }
  if (!objective.empty() && objective.size() != system.cols) {
    throw Error(ErrorKind::InvalidInput, "objective length differs from the number of variables");
  }
  for (double v : system.a) {
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "non-finite constraint coefficient");
  }
  for (double v : system.b) {
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "non-finite right-hand side");
  }

  Tableau tab(system, options);
  tab.phase_one();
  SimplexResult result;
  result.x = tab.solution();
  result.residual = l1_residual(system, result.x);
  result.feasible = result.residual <= options.feasibility_tol;
  if (result.feasible && !objective.empty()) {
    tab.expel_artificials();
    tab.phase_two(objective);
    result.x = tab.solution();
    result.residual = l1_residual(system, result.x);
  }
  result.iterations = tab.iterations();
  return result;
}

}  // namespace ctxstat::lp
