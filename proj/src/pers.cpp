#include "ctxstat/pers.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <thread>
#include <unordered_set>

#include "ctxstat/rng.hpp"

namespace ctxstat {
namespace {

template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

struct CachedTransition {
  std::optional<TransitionMatrix> matrix;
  ErrorKind kind = ErrorKind::InvalidInput;
  std::string error;
};

}  // namespace

std::string_view to_string(SamplingMode mode) {
  switch (mode) {
    case SamplingMode::WithoutReplacement: return "without_replacement";
    case SamplingMode::WithReplacement: return "with_replacement";
    case SamplingMode::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

SamplingMode parse_sampling_mode(std::string_view name) {
  if (name == "without_replacement") return SamplingMode::WithoutReplacement;
  if (name == "with_replacement") return SamplingMode::WithReplacement;
  if (name == "exhaustive") return SamplingMode::Exhaustive;
  throw Error(ErrorKind::Usage, "unknown sampling mode '" + std::string(name) + "'");
}

std::uint64_t choose3(std::uint64_t t) {
  if (t < 3) return 0;
  return t * (t - 1) / 2 * (t - 2) / 3;
}

IndexTriple unrank_triple(std::uint64_t rank, std::size_t t) {
  IndexTriple out{};
  std::size_t start = 0;
  for (std::size_t slot = 0; slot < 3; ++slot) {
    const std::size_t left = 2 - slot;  // elements still to place after this one
    for (std::size_t i = start; i < t; ++i) {
      const std::uint64_t rest = t - 1 - i;
      const std::uint64_t block = left == 2 ? rest * (rest - 1) / 2 : (left == 1 ? rest : 1);
      if (rank < block) {
        out[slot] = i;
        start = i + 1;
        break;
      }
      rank -= block;
    }
  }
  return out;
}

std::vector<IndexTriple> sample_triples(const ObservableSet& set, const SamplingPlan& plan) {
  const std::size_t t = set.size();
  if (t < 3) {
    throw Error(ErrorKind::TooFewObservables,
                "need at least 3 observables, have " + std::to_string(t));
  }
  const std::uint64_t population = choose3(t);
  std::vector<IndexTriple> out;

  if (plan.mode == SamplingMode::Exhaustive) {
    if (population > kMaxExhaustiveTriples) {
      throw Error(ErrorKind::ProblemTooLarge, "exhaustive mode allows at most 100000 triples");
    }
    out.reserve(population);
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j) {
        for (std::size_t k = j + 1; k < t; ++k) out.push_back({i, j, k});
      }
    }
    return out;
  }

  const std::uint64_t wanted =
      plan.num_triples.value_or(std::min<std::uint64_t>(kDefaultTripleSample, population));
  rng::Engine eng(rng::derive_seed(plan.seed, 0x5A3B1E));
  out.reserve(wanted);

  if (plan.mode == SamplingMode::WithReplacement) {
    for (std::uint64_t s = 0; s < wanted; ++s) {
      out.push_back(unrank_triple(rng::bounded(eng, population), t));
    }
    return out;
  }

  if (wanted > population) {
    throw Error(ErrorKind::SampleExceedsPopulation,
                std::to_string(wanted) + " triples requested but only " +
                    std::to_string(population) + " exist");
  }
  // Floyd's algorithm: distinct ranks, emitted in insertion order.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(wanted * 2);
  for (std::uint64_t j = population - wanted; j < population; ++j) {
    const std::uint64_t r = rng::bounded(eng, j + 1);
    const std::uint64_t pick = chosen.insert(r).second ? r : j;
    if (pick == j) chosen.insert(j);
    out.push_back(unrank_triple(pick, t));
  }
  return out;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double centre = (p + z2 / (2.0 * nn)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  return {std::max(0.0, std::min(p, centre - half)), std::min(1.0, std::max(p, centre + half))};
}

PersEstimate summarize(const std::vector<TripleReport>& triples, std::uint64_t seed) {
  PersEstimate e;
  e.seed = seed;
  e.sampled = triples.size();
  for (const auto& t : triples) {
    if (!t.analysis) {
      ++e.skipped;
      continue;
    }
    ++e.decided;
    if (t.analysis->accardi.verdict != Verdict::NotApplicable) ++e.applicable;
    if (t.analysis->accardi.verdict == Verdict::Contextual) ++e.accardi_violations;
    if (!t.analysis->lp.feasible) ++e.lp_violations;
  }
  auto ratio = [](std::uint64_t k, std::uint64_t n) {
    return n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n);
  };
  e.pers_accardi = ratio(e.accardi_violations, e.applicable);
  e.pers_accardi_all = ratio(e.accardi_violations, e.sampled);
  e.pers_lp = ratio(e.lp_violations, e.decided);
  e.ci95_accardi = wilson_interval(e.accardi_violations, e.applicable);
  e.ci95_accardi_all = wilson_interval(e.accardi_violations, e.sampled);
  e.ci95_lp = wilson_interval(e.lp_violations, e.decided);
  return e;
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("CTXSTAT_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

PersRun estimate_pers(const DataSource& source, const SamplingPlan& plan, std::size_t threads) {
  if (threads == 0) threads = default_thread_count();
  const auto& set = observables_of(source);
  const auto triples = sample_triples(set, plan);
  const auto& tol = plan.tolerances;

  // Ordered pairs (conditioning, conditioned) needed by the sampled triples.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  for (const auto& [a, b, c] : triples) {
    for (auto key : {std::pair{b, a}, std::pair{c, b}, std::pair{a, c}}) {
      slot.try_emplace(key, 0);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  for (auto& [key, index] : slot) {
    index = keys.size();
    keys.push_back(key);
  }

  std::map<std::pair<std::size_t, std::size_t>, CountTable> log_counts;
  const auto* log = std::get_if<PairLogDataset>(&source);
  if (log) log_counts = count_all_pairs(*log);

  std::vector<CachedTransition> cache(keys.size());
  parallel_for(keys.size(), threads, [&](std::size_t i) {
    const auto [from, to] = keys[i];
    try {
      if (log) {
        const auto it = log_counts.find({std::min(from, to), std::max(from, to)});
        if (it == log_counts.end()) {
          throw Error(ErrorKind::EmptyPairData,
                      "no logged pairs for (" + set[from].id + ", " + set[to].id + ")");
        }
        const auto counts = from < to ? it->second : transposed(it->second);
        cache[i].matrix = estimate_transition(counts, tol.smoothing, tol.tol_b);
      } else {
        cache[i].matrix = pair_transition(source, set[from].id, set[to].id, tol.smoothing, tol.tol_b);
      }
    } catch (const Error& e) {
      cache[i].kind = e.kind();
      cache[i].error = e.what();
    }
  });

  PersRun run{plan, std::vector<TripleReport>(triples.size()), {}};
  parallel_for(triples.size(), threads, [&](std::size_t i) {
    const auto [a, b, c] = triples[i];
    auto& report = run.triples[i];
    report.ids = {set[a].id, set[b].id, set[c].id};
    const CachedTransition* parts[3] = {&cache[slot.at({b, a})], &cache[slot.at({c, b})],
                                        &cache[slot.at({a, c})]};
    for (const auto* part : parts) {
      if (!part->matrix) {
        report.error_kind = part->kind;
        report.error = part->error;
        return;
      }
    }
    try {
      report.analysis = analyze_triple(*parts[0]->matrix, *parts[1]->matrix, *parts[2]->matrix,
                                       tol.tol_lp);
    } catch (const Error& e) {
      report.error_kind = e.kind();
      report.error = e.what();
    }
  });

  run.estimate = summarize(run.triples, plan.seed);
  return run;
}

}  // namespace ctxstat
