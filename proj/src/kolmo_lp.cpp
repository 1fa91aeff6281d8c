#include "ctxstat/kolmo_lp.hpp"

#include <cmath>
#include <limits>

#include "ctxstat/error.hpp"
#include "ctxstat/simplex.hpp"

namespace ctxstat {

std::size_t JointFeasibilityProblem::sample_space_size() const {
  std::size_t size = 1;
  for (std::size_t i = 0; i < num_observables; ++i) {
    if (size > std::numeric_limits<std::size_t>::max() / num_outcomes) {
      return std::numeric_limits<std::size_t>::max();
    }
    size *= num_outcomes;
  }
  return size;
}

std::size_t JointFeasibilityProblem::digit(std::size_t point, std::size_t alpha) const {
  for (std::size_t k = alpha + 1; k < num_observables; ++k) point /= num_outcomes;
  return point % num_outcomes;
}

void validate_problem(const JointFeasibilityProblem& problem) {
  const auto n = problem.num_outcomes;
  if (problem.num_observables == 0) throw Error(ErrorKind::InvalidInput, "problem has no observables");
  if (n < 2) throw Error(ErrorKind::InvalidInput, "observables need at least two outcomes");
  if (!(problem.tolerance >= 0.0)) throw Error(ErrorKind::InvalidInput, "tolerance must be >= 0");
  for (const auto& [key, table] : problem.pair_marginals) {
    const auto [alpha, beta] = key;
    if (alpha == beta || alpha >= problem.num_observables || beta >= problem.num_observables) {
      throw Error(ErrorKind::InvalidInput, "pair (" + std::to_string(alpha) + ", " +
                                               std::to_string(beta) + ") is not a valid pair");
    }
    if (table.n != n || table.values.size() != n * n) {
      throw Error(ErrorKind::InvalidInput, "pair table has the wrong shape");
    }
    double sum = 0.0;
    for (double v : table.values) {
      if (!std::isfinite(v) || v < 0.0) {
        throw Error(ErrorKind::InvalidInput, "pair table entries must be finite and non-negative");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw Error(ErrorKind::InvalidInput, "pair table does not sum to 1");
    }
    const auto rev = problem.pair_marginals.find({beta, alpha});
    if (rev == problem.pair_marginals.end() || alpha > beta) continue;
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      double col = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        row += table(i, j);
        col += rev->second(j, i);
      }
      if (std::abs(row - col) > 1e-9) {
        throw Error(ErrorKind::InconsistentOrientations,
                    "marginals of the two orientations of pair (" + std::to_string(alpha) + ", " +
                        std::to_string(beta) + ") disagree");
      }
    }
  }
}

JointFeasibilityProblem build_problem(const std::vector<TransitionMatrix>& matrices,
                                      const ObservableSet& observables, double tol_lp) {
  JointFeasibilityProblem problem;
  problem.num_observables = observables.size();
  problem.num_outcomes = 2;
  problem.tolerance = tol_lp;
  for (const auto& m : matrices) {
    const auto alpha = observables.index_of(m.pair.first);
    const auto beta = observables.index_of(m.pair.second);
    const auto joint = m.joint();
    PairMarginal table{2, {joint[0][0], joint[0][1], joint[1][0], joint[1][1]}};

    auto check_against = [&](std::pair<std::size_t, std::size_t> key, bool transposed) {
      const auto it = problem.pair_marginals.find(key);
      if (it == problem.pair_marginals.end()) return;
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          const double other = transposed ? it->second(j, i) : it->second(i, j);
          if (std::abs(table(i, j) - other) > tol_lp) {
            throw Error(ErrorKind::InconsistentOrientations,
                        "pair (" + m.pair.first + ", " + m.pair.second +
                            ") is supplied twice with different joint probabilities");
          }
        }
      }
    };
    check_against({alpha, beta}, false);
    check_against({beta, alpha}, true);
    problem.pair_marginals[{alpha, beta}] = std::move(table);
  }
  return problem;
}

FeasibilityResult decide_feasibility(const JointFeasibilityProblem& problem) {
  validate_problem(problem);
  const std::size_t points = problem.sample_space_size();
  if (points > kMaxOutcomes) {
    throw Error(ErrorKind::ProblemTooLarge,
                "product sample space exceeds " + std::to_string(kMaxOutcomes) + " outcomes");
  }
  const auto n = problem.num_outcomes;
  const std::size_t pair_rows = problem.pair_marginals.size() * n * n;

  lp::LinearSystem sys(pair_rows + 1, points);
  std::size_t row = 0;
  for (const auto& [key, table] : problem.pair_marginals) {
    for (std::size_t x = 0; x < points; ++x) {
      const auto i = problem.digit(x, key.first);
      const auto j = problem.digit(x, key.second);
      sys.at(row + i * n + j, x) = 1.0;
    }
    for (std::size_t k = 0; k < n * n; ++k) sys.b[row + k] = table.values[k];
    row += n * n;
  }
  for (std::size_t x = 0; x < points; ++x) sys.at(row, x) = 1.0;
  sys.b[row] = 1.0;

  lp::SimplexOptions opt;
  opt.feasibility_tol = problem.tolerance;
  const auto solved = lp::solve(sys, opt);

  FeasibilityResult result;
  result.feasible = solved.feasible;
  result.raw_residual = solved.residual;
  if (solved.feasible) {
    result.witness = solved.x;
  } else {
    result.max_violation = solved.residual / static_cast<double>(std::max<std::size_t>(pair_rows, 1));
  }
  return result;
}

PairMarginal marginalize(const JointFeasibilityProblem& problem, const std::vector<double>& joint,
                         std::size_t alpha, std::size_t beta) {
  const auto n = problem.num_outcomes;
  PairMarginal out{n, std::vector<double>(n * n, 0.0)};
  for (std::size_t x = 0; x < joint.size(); ++x) {
    out.values[problem.digit(x, alpha) * n + problem.digit(x, beta)] += joint[x];
  }
  return out;
}

TripleAnalysis analyze_triple(const TransitionMatrix& a_given_b, const TransitionMatrix& b_given_c,
                              const TransitionMatrix& c_given_a, double tol_lp) {
  TripleAnalysis out;
  out.params = triple_params(a_given_b, b_given_c, c_given_a);
  out.accardi = accardi_check(out.params);
  const auto& ids = out.params.observables;
  const auto local = ObservableSet::from_ids({ids[0], ids[1], ids[2]});
  out.lp = decide_feasibility(build_problem({a_given_b, b_given_c, c_given_a}, local, tol_lp));
  return out;
}

TripleAnalysis feasibility_from_dataset(const DataSource& source,
                                        const std::array<std::string, 3>& triple,
                                        const AnalysisTolerances& tol) {
  const auto& [a, b, c] = triple;
  return analyze_triple(pair_transition(source, b, a, tol.smoothing, tol.tol_b),
                        pair_transition(source, c, b, tol.smoothing, tol.tol_b),
                        pair_transition(source, a, c, tol.smoothing, tol.tol_b), tol.tol_lp);
}

}  // namespace ctxstat
