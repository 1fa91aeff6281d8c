#pragma once

// Reference routines used only by tests. They share no code with the
// library's solver paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "ctxstat/greechie.hpp"
#include "ctxstat/kolmo_lp.hpp"

namespace ctxstat::testing {

// Uniform-prior pair tables for P(A|B)=p, P(B|C)=q, P(C|A)=r over
// observables (A, B, C) = (0, 1, 2).
inline JointFeasibilityProblem uniform_triple_problem(double p, double q, double r,
                                                      double tol = kDefaultTolLp) {
  auto table = [](double s) {
    return PairMarginal{2, {0.5 * s, 0.5 * (1 - s), 0.5 * (1 - s), 0.5 * s}};
  };
  JointFeasibilityProblem problem;
  problem.num_observables = 3;
  problem.num_outcomes = 2;
  problem.tolerance = tol;
  problem.pair_marginals[{1, 0}] = table(p);
  problem.pair_marginals[{2, 1}] = table(q);
  problem.pair_marginals[{0, 2}] = table(r);
  return problem;
}

struct ParametricVerdict {
  bool feasible = false;
  double margin = 0.0;  // distance into (positive) or out of (negative) feasibility
};

// Three binary observables with all three pair tables supplied. Once the
// singles and pair probabilities are fixed, the eight-point joint has one
// free parameter t = P(1,1,1):
//   P111 = t                 P110 = p01 - t          P101 = p02 - t
//   P011 = p12 - t           P100 = p0 - p01 - p02 + t
//   P010 = p1 - p01 - p12 + t  P001 = p2 - p02 - p12 + t
//   P000 = 1 - p0 - p1 - p2 + p01 + p02 + p12 - t
// so feasibility is an interval intersection.
inline ParametricVerdict parametric_oracle(const JointFeasibilityProblem& problem) {
  auto oriented = [&](std::size_t lo, std::size_t hi, std::size_t i, std::size_t j) {
    if (auto it = problem.pair_marginals.find({lo, hi}); it != problem.pair_marginals.end()) {
      return it->second(i, j);
    }
    return problem.pair_marginals.at({hi, lo})(j, i);
  };
  // P(X_lo = 1) and P(X_hi = 1) from one table.
  auto singles = [&](std::size_t lo, std::size_t hi) {
    return std::array<double, 2>{oriented(lo, hi, 1, 0) + oriented(lo, hi, 1, 1),
                                 oriented(lo, hi, 0, 1) + oriented(lo, hi, 1, 1)};
  };
  const auto s01 = singles(0, 1);
  const auto s02 = singles(0, 2);
  const auto s12 = singles(1, 2);
  const double inconsistency = std::max({std::abs(s01[0] - s02[0]), std::abs(s01[1] - s12[0]),
                                         std::abs(s02[1] - s12[1])});
  const double p0 = s01[0], p1 = s01[1], p2 = s02[1];
  const double p01 = oriented(0, 1, 1, 1), p02 = oriented(0, 2, 1, 1), p12 = oriented(1, 2, 1, 1);

  double lo = 0.0;
  double hi = std::min({p01, p02, p12});
  lo = std::max({lo, -(p0 - p01 - p02), -(p1 - p01 - p12), -(p2 - p02 - p12)});
  hi = std::min(hi, 1 - p0 - p1 - p2 + p01 + p02 + p12);
  ParametricVerdict v;
  v.margin = hi - lo;
  if (inconsistency > 1e-12) v.margin = -inconsistency;
  v.feasible = v.margin >= -1e-12;
  return v;
}

// Random three-observable problem with consistent singles; the triple
// condition may or may not hold.
template <typename Rng>
JointFeasibilityProblem random_consistent_triple(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::array<double, 3> s{u(rng), u(rng), u(rng)};
  JointFeasibilityProblem problem;
  problem.num_observables = 3;
  problem.num_outcomes = 2;
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 2}, {0, 2}}) {
    const double lo = std::max(0.0, s[a] + s[b] - 1.0);
    const double hi = std::min(s[a], s[b]);
    const double both = lo + (hi - lo) * u(rng);
    const double t10 = s[a] - both, t01 = s[b] - both;
    const double t00 = std::max(0.0, 1.0 - both - t10 - t01);
    problem.pair_marginals[{a, b}] = PairMarginal{2, {t00, t01, t10, both}};
  }
  return problem;
}

// Random joint over n^T points and the problem made of its own pair marginals.
template <typename Rng>
std::pair<JointFeasibilityProblem, std::vector<double>> problem_from_random_joint(
    Rng& rng, std::size_t t, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  JointFeasibilityProblem problem;
  problem.num_observables = t;
  problem.num_outcomes = n;
  std::vector<double> joint(problem.sample_space_size());
  double total = 0.0;
  for (auto& v : joint) total += (v = e(rng));
  for (auto& v : joint) v /= total;
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = a + 1; b < t; ++b) {
      problem.pair_marginals[{a, b}] = marginalize(problem, joint, a, b);
    }
  }
  return {problem, joint};
}

// Exhaustive count of 0/1 assignments with exactly one 1 per context.
// Atoms outside every context stay 0.
inline std::size_t brute_force_two_valued(const ContextHypergraph& h) {
  const std::size_t n = h.atoms.size();
  std::uint64_t covered = 0;
  for (const auto& ctx : h.contexts) {
    for (auto a : ctx) covered |= std::uint64_t{1} << a;
  }
  std::size_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (m & ~covered) continue;
    bool ok = true;
    for (const auto& ctx : h.contexts) {
      int ones = 0;
      for (auto a : ctx) ones += (m >> a) & 1u;
      if (ones != 1) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count;
}

}  // namespace ctxstat::testing
