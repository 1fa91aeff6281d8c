#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ctxstat::lp {

// Dense equality system A x = b, x >= 0. A is row-major, rows x cols.
struct LinearSystem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;
  std::vector<double> b;

  LinearSystem() = default;
  LinearSystem(std::size_t rows_, std::size_t cols_)
      : rows(rows_), cols(cols_), a(rows_ * cols_, 0.0), b(rows_, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

struct SimplexOptions {
  double feasibility_tol = 1e-8;  // bound on the L1 phase-one residual
  double pivot_tol = 1e-9;
  std::size_t max_iterations = 0;  // 0: chosen from problem size
};

struct SimplexResult {
  bool feasible = false;
  std::vector<double> x;    // basic solution; a witness when feasible
  double residual = 0.0;    // sum_i (b_i - A_i x), the phase-one optimum
  std::size_t iterations = 0;
};

// Two-phase dense tableau simplex. Phase one minimises the sum of
// artificial variables; if the system is feasible and `objective` is
// non-empty, phase two minimises objective . x over the feasible set.
// Throws Error(SolverFailure) on iteration exhaustion, non-finite values or
// an unbounded phase-two objective.
SimplexResult solve(const LinearSystem& system, const SimplexOptions& options = {},
                    std::span<const double> objective = {});

}  // namespace ctxstat::lp
