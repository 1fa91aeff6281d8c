#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ctxstat/dataset.hpp"

namespace ctxstat {

inline constexpr std::size_t kMaxClassicalObservables = 16;

// Classical single-sample-space model over {0,1}^T. Without an explicit
// table, one is drawn from the flat prior on the simplex using `seed`.
struct ClassicalModelSpec {
  std::size_t num_observables = 3;
  std::optional<std::vector<double>> table;
  std::size_t num_records = 0;
  std::uint64_t seed = 0;
};

struct ClassicalSample {
  JointRecordDataset data;
  ExactJointModel exact;
};

// Draws a table from the flat Dirichlet prior on the 2^T simplex.
std::vector<double> random_joint_table(std::size_t num_observables, std::uint64_t seed);

// Throws InvalidInput when the spec is malformed.
ClassicalSample gen_classical(const ClassicalModelSpec& spec);

// Projective spin measurements along in-plane directions, measured pairwise
// on a maximally mixed qubit.
struct QubitModelSpec {
  std::vector<double> angles_deg;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // empty: every pair i < j
  std::size_t trials_per_pair = 0;
  std::uint64_t seed = 0;
};

struct QuantumSample {
  PairLogDataset data;
  ExactPairModel exact;
};

// Same-outcome probability cos^2((theta_a - theta_b) / 2).
double born_same_outcome(double theta_a_deg, double theta_b_deg);

QuantumSample gen_quantum(const QubitModelSpec& spec);

}  // namespace ctxstat
