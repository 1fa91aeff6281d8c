#include "ctxstat/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>

#include "ctxstat/error.hpp"
#include "ctxstat/rng.hpp"

namespace ctxstat {
namespace {

ObservableSet numbered(const char* prefix, std::size_t count, const std::string& source) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < count; ++i) ids.push_back(prefix + std::to_string(i));
  return ObservableSet::from_ids(ids, source);
}

}  // namespace

std::vector<double> random_joint_table(std::size_t num_observables, std::uint64_t seed) {
  rng::Engine eng(rng::derive_seed(seed, 0x7AB1E));
  std::vector<double> table(std::size_t{1} << num_observables);
  for (auto& v : table) v = -std::log(rng::uniform01_open_low(eng));
  const double total = std::accumulate(table.begin(), table.end(), 0.0);
  for (auto& v : table) v /= total;
  return table;
}

ClassicalSample gen_classical(const ClassicalModelSpec& spec) {
  const auto t = spec.num_observables;
  if (t == 0 || t > kMaxClassicalObservables) {
    throw Error(ErrorKind::InvalidInput, "classical model needs 1..16 observables");
  }
  std::vector<double> table = spec.table ? *spec.table : random_joint_table(t, spec.seed);
  if (table.size() != (std::size_t{1} << t)) {
    throw Error(ErrorKind::InvalidInput, "joint table must have 2^T entries");
  }
  double total = 0.0;
  for (double v : table) {
    if (!(v >= 0.0)) throw Error(ErrorKind::InvalidInput, "joint table entries must be >= 0");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorKind::InvalidInput, "joint table must sum to 1");

  const auto source = "classical:T=" + std::to_string(t) + ",seed=" + std::to_string(spec.seed);
  ClassicalSample out{JointRecordDataset(numbered("X", t, source)),
                      ExactJointModel{numbered("X", t, source), table}};

  std::vector<double> cdf(table.size());
  std::partial_sum(table.begin(), table.end(), cdf.begin());
  rng::Engine eng(rng::derive_seed(spec.seed, 1));
  std::vector<std::uint8_t> record(t);
  for (std::size_t r = 0; r < spec.num_records; ++r) {
    const double u = rng::uniform01(eng) * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto x = static_cast<std::size_t>(std::min<std::ptrdiff_t>(
        it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
    for (std::size_t a = 0; a < t; ++a) record[a] = out.exact.outcome_bit(x, a);
    out.data.add_record(record);
  }
  return out;
}

double born_same_outcome(double theta_a_deg, double theta_b_deg) {
  const double half = (theta_a_deg - theta_b_deg) * std::numbers::pi / 360.0;
  const double c = std::cos(half);
  return c * c;
}

QuantumSample gen_quantum(const QubitModelSpec& spec) {
  const auto t = spec.angles_deg.size();
  if (t < 2) throw Error(ErrorKind::InvalidInput, "quantum model needs at least two angles");
  for (double a : spec.angles_deg) {
    if (!(a >= 0.0 && a < 360.0)) throw Error(ErrorKind::InvalidInput, "angles must lie in [0, 360)");
  }
  auto pairs = spec.pairs;
  if (pairs.empty()) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j) pairs.emplace_back(i, j);
    }
  }
  std::string source = "quantum:angles=";
  for (std::size_t i = 0; i < t; ++i) {
    if (i) source += ';';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", spec.angles_deg[i]);
    source += buf;
  }
  source += ",seed=" + std::to_string(spec.seed);

  QuantumSample out{PairLogDataset(numbered("Q", t, source)),
                    ExactPairModel{numbered("Q", t, source), {}}};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [ia, ib] = pairs[k];
    if (ia >= t || ib >= t || ia == ib) {
      throw Error(ErrorKind::InvalidInput, "pair indices must name two distinct angles");
    }
    const double same = born_same_outcome(spec.angles_deg[ia], spec.angles_deg[ib]);
    out.exact.same_outcome[{std::min(ia, ib), std::max(ia, ib)}] = same;

    rng::Engine eng(rng::derive_seed(spec.seed, k));
    for (std::size_t n = 0; n < spec.trials_per_pair; ++n) {
      const auto va = static_cast<std::uint8_t>(eng() >> 63);
      const bool agree = rng::uniform01(eng) < same;
      const auto vb = static_cast<std::uint8_t>(agree ? va : 1 - va);
      out.data.add_entry({static_cast<std::uint32_t>(ia), va, static_cast<std::uint32_t>(ib), vb});
    }
  }
  return out;
}

}  // namespace ctxstat
