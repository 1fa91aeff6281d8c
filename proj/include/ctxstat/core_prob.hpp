#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ctxstat/dataset.hpp"

namespace ctxstat {

inline constexpr double kDefaultTolB = 0.05;
inline constexpr double kStochasticTol = 1e-9;

using Table2 = std::array<std::array<double, 2>, 2>;

// counts[i][j] = #records (or logged pairs) with A=i and B=j.
struct CountTable {
  std::pair<std::string, std::string> pair;
  std::array<std::array<std::uint64_t, 2>, 2> counts{};
  std::uint64_t total = 0;

  std::uint64_t row_sum(int i) const { return counts[i][0] + counts[i][1]; }
};

// entries[i][j] = P(B=j | A=i) for pair = (A, B), A conditioning.
struct TransitionMatrix {
  std::pair<std::string, std::string> pair;
  Table2 entries{};
  std::array<double, 2> priors{};
  std::optional<double> bistochastic_param;
  double bistochastic_deviation = 0.0;

  // (M00 + M11) / 2, whether or not the matrix is within tolerance of bistochastic.
  double symmetric_param() const { return 0.5 * (entries[0][0] + entries[1][1]); }
  bool is_bistochastic() const { return bistochastic_param.has_value(); }
  // P(A=i, B=j) = P(A=i) M[i][j].
  Table2 joint() const;
};

struct ConsistencyReport {
  double discrepancy = 0.0;
  bool consistent = true;
};

CountTable count_pairs(const JointRecordDataset& data, const std::string& a, const std::string& b);
CountTable count_pairs(const PairLogDataset& data, const std::string& a, const std::string& b);

// Every logged pair in one pass, keyed by (lo, hi) observable index and
// oriented lo -> hi.
std::map<std::pair<std::size_t, std::size_t>, CountTable> count_all_pairs(const PairLogDataset& data);

CountTable transposed(const CountTable& counts);

// Additive smoothing alpha >= 0:
//   M[i][j] = (c_ij + alpha) / (row_i + 2 alpha)
//   P(A=i)  = (row_i + 2 alpha) / (total + 4 alpha)
TransitionMatrix estimate_transition(const CountTable& counts, double alpha = 0.0,
                                     double tol_b = kDefaultTolB);

// From an exact 2x2 joint probability table of (A, B).
TransitionMatrix transition_from_joint(std::pair<std::string, std::string> pair, const Table2& joint,
                                       double tol_b = kDefaultTolB);

ConsistencyReport bayes_consistency(const TransitionMatrix& t_ab, const TransitionMatrix& t_ba,
                                    double tol);

// P(b | a) from any data source. alpha only applies to count-based sources.
TransitionMatrix pair_transition(const DataSource& source, const std::string& a,
                                 const std::string& b, double alpha = 0.0,
                                 double tol_b = kDefaultTolB);

}  // namespace ctxstat
