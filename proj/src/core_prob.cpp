#include "ctxstat/core_prob.hpp"

#include <algorithm>
#include <cmath>

#include "ctxstat/error.hpp"

namespace ctxstat {
namespace {

void finish_bistochastic(TransitionMatrix& m, double tol_b) {
  m.bistochastic_deviation = std::abs(m.entries[0][0] - m.entries[1][1]);
  if (m.bistochastic_deviation <= tol_b) m.bistochastic_param = m.symmetric_param();
}

void require_distinct(const std::string& a, const std::string& b) {
  if (a == b) throw Error(ErrorKind::InvalidInput, "pair must name two different observables");
}

}  // namespace

Table2 TransitionMatrix::joint() const {
  Table2 j{};
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) j[i][k] = priors[i] * entries[i][k];
  }
  return j;
}

CountTable count_pairs(const JointRecordDataset& data, const std::string& a, const std::string& b) {
  require_distinct(a, b);
  const auto ia = data.observables().index_of(a);
  const auto ib = data.observables().index_of(b);
  CountTable out{{a, b}};
  for (std::size_t r = 0; r < data.num_records(); ++r) {
    ++out.counts[data.value(r, ia)][data.value(r, ib)];
  }
  out.total = data.num_records();
  if (out.total == 0) throw Error(ErrorKind::EmptyPairData, "dataset has no records");
  return out;
}

CountTable count_pairs(const PairLogDataset& data, const std::string& a, const std::string& b) {
  require_distinct(a, b);
  const auto ia = static_cast<std::uint32_t>(data.observables().index_of(a));
  const auto ib = static_cast<std::uint32_t>(data.observables().index_of(b));
  CountTable out{{a, b}};
  for (const auto& e : data.entries()) {
    if (e.obs_a == ia && e.obs_b == ib) {
      ++out.counts[e.value_a][e.value_b];
    } else if (e.obs_a == ib && e.obs_b == ia) {
      ++out.counts[e.value_b][e.value_a];
    }
  }
  out.total = out.counts[0][0] + out.counts[0][1] + out.counts[1][0] + out.counts[1][1];
  if (out.total == 0) {
    throw Error(ErrorKind::EmptyPairData, "no logged pairs for (" + a + ", " + b + ")");
  }
  return out;
}

std::map<std::pair<std::size_t, std::size_t>, CountTable> count_all_pairs(const PairLogDataset& data) {
  std::map<std::pair<std::size_t, std::size_t>, CountTable> out;
  const auto& obs = data.observables();
  for (const auto& e : data.entries()) {
    const bool flip = e.obs_a > e.obs_b;
    const std::size_t lo = flip ? e.obs_b : e.obs_a;
    const std::size_t hi = flip ? e.obs_a : e.obs_b;
    auto [it, inserted] = out.try_emplace({lo, hi});
    if (inserted) it->second.pair = {obs[lo].id, obs[hi].id};
    ++it->second.counts[flip ? e.value_b : e.value_a][flip ? e.value_a : e.value_b];
    ++it->second.total;
  }
  return out;
}

CountTable transposed(const CountTable& counts) {
  CountTable out{{counts.pair.second, counts.pair.first}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.counts[i][j] = counts.counts[j][i];
  }
  out.total = counts.total;
  return out;
}

TransitionMatrix estimate_transition(const CountTable& counts, double alpha, double tol_b) {
  if (!(alpha >= 0.0)) throw Error(ErrorKind::InvalidInput, "smoothing must be >= 0");
  TransitionMatrix m;
  m.pair = counts.pair;
  const double denom_total = static_cast<double>(counts.total) + 4.0 * alpha;
  for (int i = 0; i < 2; ++i) {
    const double row = static_cast<double>(counts.row_sum(i));
    const double denom = row + 2.0 * alpha;
    if (!(denom > 0.0)) {
      throw Error(ErrorKind::ZeroConditioningRow,
                  "no observations with " + counts.pair.first + "=" + std::to_string(i));
    }
    m.entries[i][0] = (static_cast<double>(counts.counts[i][0]) + alpha) / denom;
    m.entries[i][1] = (static_cast<double>(counts.counts[i][1]) + alpha) / denom;
    m.priors[i] = denom / denom_total;
  }
  finish_bistochastic(m, tol_b);
  return m;
}

TransitionMatrix transition_from_joint(std::pair<std::string, std::string> pair, const Table2& joint,
                                       double tol_b) {
  TransitionMatrix m;
  m.pair = std::move(pair);
  double total = 0.0;
  for (const auto& row : joint) total += row[0] + row[1];
  for (int i = 0; i < 2; ++i) {
    const double row = joint[i][0] + joint[i][1];
    if (!(row > 0.0)) {
      throw Error(ErrorKind::ZeroConditioningRow,
                  "zero probability for " + m.pair.first + "=" + std::to_string(i));
    }
    m.entries[i][0] = joint[i][0] / row;
    m.entries[i][1] = joint[i][1] / row;
    m.priors[i] = row / total;
  }
  finish_bistochastic(m, tol_b);
  return m;
}

ConsistencyReport bayes_consistency(const TransitionMatrix& t_ab, const TransitionMatrix& t_ba,
                                    double tol) {
  if (t_ab.pair.first != t_ba.pair.second || t_ab.pair.second != t_ba.pair.first) {
    throw Error(ErrorKind::PairMismatch, "matrices are not opposite orientations of one pair");
  }
  ConsistencyReport report;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double lhs = t_ab.priors[i] * t_ab.entries[i][j];
      const double rhs = t_ba.priors[j] * t_ba.entries[j][i];
      report.discrepancy = std::max(report.discrepancy, std::abs(lhs - rhs));
    }
  }
  report.consistent = report.discrepancy <= tol;
  return report;
}

TransitionMatrix pair_transition(const DataSource& source, const std::string& a,
                                 const std::string& b, double alpha, double tol_b) {
  if (const auto* joint = std::get_if<JointRecordDataset>(&source)) {
    return estimate_transition(count_pairs(*joint, a, b), alpha, tol_b);
  }
  if (const auto* log = std::get_if<PairLogDataset>(&source)) {
    return estimate_transition(count_pairs(*log, a, b), alpha, tol_b);
  }
  require_distinct(a, b);
  if (const auto* exact = std::get_if<ExactJointModel>(&source)) {
    const auto ia = exact->observables.index_of(a);
    const auto ib = exact->observables.index_of(b);
    Table2 j{};
    for (std::size_t x = 0; x < exact->table.size(); ++x) {
      j[exact->outcome_bit(x, ia)][exact->outcome_bit(x, ib)] += exact->table[x];
    }
    return transition_from_joint({a, b}, j, tol_b);
  }
  const auto& model = std::get<ExactPairModel>(source);
  const auto ia = model.observables.index_of(a);
  const auto ib = model.observables.index_of(b);
  const auto it = model.same_outcome.find({std::min(ia, ib), std::max(ia, ib)});
  if (it == model.same_outcome.end()) {
    throw Error(ErrorKind::EmptyPairData, "no model parameter for (" + a + ", " + b + ")");
  }
  const double p = it->second;
  TransitionMatrix m;
  m.pair = {a, b};
  m.entries = Table2{{{p, 1.0 - p}, {1.0 - p, p}}};
  m.priors = {0.5, 0.5};
  finish_bistochastic(m, tol_b);
  return m;
}

}  // namespace ctxstat
