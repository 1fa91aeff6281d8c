#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ctxstat/accardi.hpp"
#include "ctxstat/core_prob.hpp"
#include "ctxstat/dataset.hpp"

namespace ctxstat {

inline constexpr double kDefaultTolLp = 1e-8;
inline constexpr std::size_t kMaxOutcomes = 1'000'000;

// n x n table, row-major: entry (i, j) = P(A_alpha = i and A_beta = j).
struct PairMarginal {
  std::size_t n = 2;
  std::vector<double> values;

  double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

// Does a single distribution over the n^T product outcomes reproduce the
// supplied pair marginals? Pairs absent from the map are unconstrained.
struct JointFeasibilityProblem {
  std::size_t num_observables = 0;
  std::size_t num_outcomes = 2;
  std::map<std::pair<std::size_t, std::size_t>, PairMarginal> pair_marginals;
  double tolerance = kDefaultTolLp;

  // Number of points of the product sample space (n^T); saturates at SIZE_MAX.
  std::size_t sample_space_size() const;
  // Outcome of observable `alpha` at product point `point`; observable 0 is
  // the most significant base-n digit.
  std::size_t digit(std::size_t point, std::size_t alpha) const;
};

struct FeasibilityResult {
  bool feasible = false;
  std::optional<std::vector<double>> witness;
  // Phase-one L1 residual divided by the number of pair-marginal entries;
  // 0 when feasible.
  double max_violation = 0.0;
  double raw_residual = 0.0;  // undivided phase-one L1 residual
};

// Checks table shapes, entries >= 0, sums to 1 and cross-orientation
// agreement. Throws InvalidInput / InconsistentOrientations.
void validate_problem(const JointFeasibilityProblem& problem);

// J_(a,b)(i, j) = P(a=i) M_ab[i][j] for every supplied matrix. Both
// orientations of a pair may be supplied; if they disagree beyond tol_lp the
// problem is rejected with InconsistentOrientations.
JointFeasibilityProblem build_problem(const std::vector<TransitionMatrix>& matrices,
                                      const ObservableSet& observables,
                                      double tol_lp = kDefaultTolLp);

// Throws ProblemTooLarge when n^T > 10^6, SolverFailure on numerical breakdown.
FeasibilityResult decide_feasibility(const JointFeasibilityProblem& problem);

// Pair marginals of a distribution over the product space (for witnesses).
PairMarginal marginalize(const JointFeasibilityProblem& problem, const std::vector<double>& joint,
                         std::size_t alpha, std::size_t beta);

struct TripleAnalysis {
  TripleParams params;
  AccardiVerdict accardi;
  FeasibilityResult lp;
};

struct AnalysisTolerances {
  double smoothing = 0.0;
  double tol_b = kDefaultTolB;
  double tol_lp = kDefaultTolLp;
};

// Estimate P(A|B), P(B|C), P(C|A) from the source, run the Accardi test and
// decide the three-observable marginal problem built from the same matrices.
TripleAnalysis feasibility_from_dataset(const DataSource& source,
                                        const std::array<std::string, 3>& triple,
                                        const AnalysisTolerances& tol = {});

// The same pipeline from already-estimated matrices.
TripleAnalysis analyze_triple(const TransitionMatrix& a_given_b, const TransitionMatrix& b_given_c,
                              const TransitionMatrix& c_given_a, double tol_lp = kDefaultTolLp);

}  // namespace ctxstat
