#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctxstat/dataset.hpp"
#include "ctxstat/error.hpp"
#include "ctxstat/kolmo_lp.hpp"

namespace ctxstat {

inline constexpr std::uint64_t kMaxExhaustiveTriples = 100'000;
inline constexpr std::size_t kDefaultTripleSample = 1000;

enum class SamplingMode { WithoutReplacement, WithReplacement, Exhaustive };

std::string_view to_string(SamplingMode mode);
// Throws Usage for an unknown name.
SamplingMode parse_sampling_mode(std::string_view name);

struct SamplingPlan {
  std::optional<std::uint64_t> num_triples;  // default min(1000, C(T,3))
  SamplingMode mode = SamplingMode::WithoutReplacement;
  std::uint64_t seed = 0;
  AnalysisTolerances tolerances;
};

// Observable indices, ascending.
using IndexTriple = std::array<std::size_t, 3>;

std::uint64_t choose3(std::uint64_t t);
// The rank-th triple of {0..t-1} in lexicographic order.
IndexTriple unrank_triple(std::uint64_t rank, std::size_t t);

// Throws TooFewObservables (T < 3), SampleExceedsPopulation, ProblemTooLarge
// (exhaustive beyond 10^5 triples).
std::vector<IndexTriple> sample_triples(const ObservableSet& set, const SamplingPlan& plan);

struct Interval {
  double lower = 0.0;
  double upper = 1.0;
};

// Wilson score interval; [0, 1] for n == 0.
Interval wilson_interval(std::uint64_t successes, std::uint64_t n, double z = 1.959963984540054);

struct TripleReport {
  std::array<std::string, 3> ids;
  std::optional<TripleAnalysis> analysis;  // absent when skipped
  std::optional<ErrorKind> error_kind;
  std::string error;
};

struct PersEstimate {
  double pers_accardi = 0.0;      // violations / applicable
  double pers_accardi_all = 0.0;  // violations / sampled
  double pers_lp = 0.0;           // LP-infeasible / decided
  std::uint64_t sampled = 0;
  std::uint64_t decided = 0;
  std::uint64_t applicable = 0;
  std::uint64_t skipped = 0;
  std::uint64_t accardi_violations = 0;
  std::uint64_t lp_violations = 0;
  std::uint64_t seed = 0;
  Interval ci95_accardi;
  Interval ci95_accardi_all;
  Interval ci95_lp;
};

struct PersRun {
  SamplingPlan plan;
  std::vector<TripleReport> triples;  // in sampled order
  PersEstimate estimate;
};

// Tally the per-triple reports into ratios and intervals.
PersEstimate summarize(const std::vector<TripleReport>& triples, std::uint64_t seed);

// Evaluates every sampled triple, in parallel across `threads` workers
// (0: CTXSTAT_THREADS or the hardware concurrency). The result does not
// depend on the thread count.
PersRun estimate_pers(const DataSource& source, const SamplingPlan& plan, std::size_t threads = 0);

std::size_t default_thread_count();

}  // namespace ctxstat
