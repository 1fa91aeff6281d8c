#include "ctxstat/greechie.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "ctxstat/error.hpp"
#include "ctxstat/simplex.hpp"

namespace ctxstat {
namespace {

std::vector<std::size_t> unique_members(const std::vector<std::size_t>& ctx) {
  std::vector<std::size_t> s(ctx);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

lp::LinearSystem context_system(const ContextHypergraph& h) {
  lp::LinearSystem sys(h.contexts.size(), h.atoms.size());
  for (std::size_t c = 0; c < h.contexts.size(); ++c) {
    for (auto a : unique_members(h.contexts[c])) sys.at(c, a) = 1.0;
    sys.b[c] = 1.0;
  }
  return sys;
}

void check_indices(const ContextHypergraph& h) {
  for (const auto& ctx : h.contexts) {
    for (auto a : ctx) {
      if (a >= h.atoms.size()) throw Error(ErrorKind::InvalidInput, "context references a missing atom");
    }
  }
}

}  // namespace

ContextHypergraph ContextHypergraph::from_names(
    std::vector<std::string> atoms, const std::vector<std::vector<std::string>>& contexts) {
  ContextHypergraph h;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < atoms.size(); ++i) index.emplace(atoms[i], i);
  h.atoms = std::move(atoms);
  for (const auto& names : contexts) {
    std::vector<std::size_t> ctx;
    for (const auto& name : names) {
      const auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorKind::InvalidInput, "undeclared atom '" + name + "'");
      ctx.push_back(it->second);
    }
    h.contexts.push_back(std::move(ctx));
  }
  return h;
}

ValidationReport validate(const ContextHypergraph& h) {
  check_indices(h);
  ValidationReport report;

  std::set<std::string> seen;
  for (const auto& atom : h.atoms) {
    if (!seen.insert(atom).second) report.duplicate_atoms.push_back(atom);
  }

  std::vector<bool> covered(h.atoms.size(), false);
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t c = 0; c < h.contexts.size(); ++c) {
    auto s = unique_members(h.contexts[c]);
    if (s.size() != h.contexts[c].size()) report.repeated_members.push_back(c);
    if (s.size() < 2) report.small_contexts.push_back(c);
    for (auto a : s) covered[a] = true;
    sets.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < h.atoms.size(); ++a) {
    if (!covered[a]) report.uncovered_atoms.push_back(a);
  }

  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      if (sets[i] == sets[j]) {
        if (i < j) report.duplicate_contexts.emplace_back(i, j);
      } else if (std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end())) {
        report.subset_contexts.emplace_back(i, j);
      }
    }
  }

  // Union-find over contexts joined through shared atoms.
  std::vector<std::size_t> parent(sets.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> owner(h.atoms.size(), SIZE_MAX);
  for (std::size_t c = 0; c < sets.size(); ++c) {
    for (auto a : sets[c]) {
      if (owner[a] == SIZE_MAX) {
        owner[a] = c;
      } else {
        parent[root(c)] = root(owner[a]);
      }
    }
  }
  for (std::size_t c = 0; c < sets.size(); ++c) {
    if (root(c) == c) ++report.components;
  }
  return report;
}

double max_context_violation(const ContextHypergraph& h, const std::vector<double>& values) {
  double worst = 0.0;
  for (const auto& ctx : h.contexts) {
    double sum = 0.0;
    for (auto a : unique_members(ctx)) sum += values.at(a);
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

std::optional<State> find_state(const ContextHypergraph& h, double tol) {
  return probe_state(h, tol).state;
}

StateProbe probe_state(const ContextHypergraph& h, double tol) {
  check_indices(h);
  if (h.atoms.size() > kMaxStateAtoms) {
    throw Error(ErrorKind::ProblemTooLarge, "more than " + std::to_string(kMaxStateAtoms) + " atoms");
  }
  const auto sys = context_system(h);
  lp::SimplexOptions opt;
  opt.feasibility_tol = tol;

  // Atoms outside every context are unconstrained; they get no objective
  // weight and stay at 0.
  std::vector<bool> covered(h.atoms.size(), false);
  for (const auto& ctx : h.contexts) {
    for (auto a : ctx) covered[a] = true;
  }
  std::vector<double> up(h.atoms.size(), 0.0);
  std::vector<double> down(h.atoms.size(), 0.0);
  for (std::size_t a = 0; a < up.size(); ++a) {
    if (!covered[a]) continue;
    up[a] = static_cast<double>(a + 1);
    down[a] = -up[a];
  }

  StateProbe probe;
  const auto low = lp::solve(sys, opt, up);
  if (!low.feasible) return probe;
  const auto high = lp::solve(sys, opt, down);
  probe.state = State{low.x};
  double gap = 0.0;
  for (std::size_t a = 0; a < low.x.size(); ++a) gap = std::max(gap, std::abs(low.x[a] - high.x[a]));
  const bool all_covered = std::find(covered.begin(), covered.end(), false) == covered.end();
  probe.unique_up_to_tolerance = high.feasible && gap <= tol && all_covered;
  return probe;
}

std::vector<TwoValuedState> enumerate_two_valued_states(const ContextHypergraph& h,
                                                        std::size_t limit) {
  check_indices(h);
  const std::size_t n = h.atoms.size();
  if (n > kMaxEnumerationAtoms) {
    throw Error(ErrorKind::ProblemTooLarge,
                "exhaustive enumeration supports at most " + std::to_string(kMaxEnumerationAtoms) +
                    " atoms");
  }
  using Mask = std::uint64_t;
  std::vector<Mask> ctx_masks;
  std::vector<Mask> neighbours(n, 0);
  for (const auto& ctx : h.contexts) {
    Mask m = 0;
    for (auto a : ctx) m |= Mask{1} << a;
    ctx_masks.push_back(m);
    for (auto a : ctx) neighbours[a] |= m & ~(Mask{1} << a);
  }

  std::vector<Mask> found;
  // Each context gets exactly one atom set to 1; branching on which atom of
  // the tightest uncovered context is chosen visits every solution once.
  std::function<void(Mask, Mask)> search = [&](Mask ones, Mask forbidden) {
    if (found.size() >= limit) return;
    std::size_t best = SIZE_MAX;
    int best_count = 65;
    for (std::size_t c = 0; c < ctx_masks.size(); ++c) {
      if (ctx_masks[c] & ones) continue;
      const int count = std::popcount(ctx_masks[c] & ~forbidden);
      if (count == 0) return;
      if (count < best_count) {
        best_count = count;
        best = c;
      }
    }
    if (best == SIZE_MAX) {
      found.push_back(ones);
      return;
    }
    Mask candidates = ctx_masks[best] & ~forbidden;
    while (candidates && found.size() < limit) {
      const auto a = static_cast<std::size_t>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      search(ones | (Mask{1} << a), forbidden | neighbours[a] | (Mask{1} << a));
    }
  };
  if (limit > 0) search(0, 0);

  std::vector<std::size_t> by_id(n);
  std::iota(by_id.begin(), by_id.end(), 0);
  std::stable_sort(by_id.begin(), by_id.end(),
                   [&](std::size_t x, std::size_t y) { return h.atoms[x] < h.atoms[y]; });

  std::vector<TwoValuedState> out;
  out.reserve(found.size());
  for (Mask m : found) {
    TwoValuedState s{std::vector<std::uint8_t>(n, 0)};
    for (std::size_t a = 0; a < n; ++a) s.values[a] = (m >> a) & 1u;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [&](const TwoValuedState& x, const TwoValuedState& y) {
    for (auto a : by_id) {
      if (x.values[a] != y.values[a]) return x.values[a] < y.values[a];
    }
    return false;
  });
  return out;
}

ContextHypergraph contingency_to_hypergraph(const std::string& a, const std::string& b,
                                            ContingencyLayout layout) {
  if (layout == ContingencyLayout::SingleSampleSpace) {
    return ContextHypergraph{{a + "&" + b, a + "&!" + b, "!" + a + "&" + b, "!" + a + "&!" + b},
                             {{0, 1, 2, 3}}};
  }
  return ContextHypergraph{{a, "!" + a, b, "!" + b}, {{0, 1}, {2, 3}}};
}

ContextHypergraph cycle_hypergraph(std::size_t k, const std::string& prefix) {
  ContextHypergraph h;
  for (std::size_t i = 0; i < k; ++i) h.atoms.push_back(prefix + std::to_string(i + 1));
  for (std::size_t i = 0; i < k; ++i) h.contexts.push_back({i, (i + 1) % k});
  return h;
}

}  // namespace ctxstat
