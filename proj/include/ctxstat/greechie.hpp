#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ctxstat {

inline constexpr std::size_t kMaxStateAtoms = 10'000;
inline constexpr std::size_t kMaxEnumerationAtoms = 64;

// Atoms plus contexts (pasted sample spaces). Contexts hold atom indices.
// Construction does not enforce the structural invariants; see validate().
struct ContextHypergraph {
  std::vector<std::string> atoms;
  std::vector<std::vector<std::size_t>> contexts;

  // Throws InvalidInput when a context names an undeclared atom.
  static ContextHypergraph from_names(std::vector<std::string> atoms,
                                      const std::vector<std::vector<std::string>>& contexts);
};

struct ValidationReport {
  std::vector<std::size_t> uncovered_atoms;
  std::vector<std::pair<std::size_t, std::size_t>> subset_contexts;  // (inner, outer)
  std::vector<std::string> duplicate_atoms;
  std::vector<std::pair<std::size_t, std::size_t>> duplicate_contexts;
  std::vector<std::size_t> small_contexts;  // fewer than two atoms
  std::vector<std::size_t> repeated_members;  // contexts listing an atom twice
  std::size_t components = 0;  // connected components of the context graph

  bool valid() const {
    return uncovered_atoms.empty() && subset_contexts.empty() && duplicate_atoms.empty() &&
           duplicate_contexts.empty() && small_contexts.empty() && repeated_members.empty();
  }
  // More than one component: some contexts share no atoms with the rest.
  bool unpasted() const { return components > 1; }
};

// Probability per atom, indexed like ContextHypergraph::atoms.
struct State {
  std::vector<double> values;
};

struct TwoValuedState {
  std::vector<std::uint8_t> values;
};

ValidationReport validate(const ContextHypergraph& h);

// Largest |sum_{a in C} values[a] - 1| over contexts.
double max_context_violation(const ContextHypergraph& h, const std::vector<double>& values);

// A state summing to 1 in every context, or nullopt when none exists.
// Throws ProblemTooLarge above 10^4 atoms.
std::optional<State> find_state(const ContextHypergraph& h, double tol = 1e-9);

struct StateProbe {
  std::optional<State> state;
  // Re-solved under two opposite linear objectives; the optima agree.
  bool unique_up_to_tolerance = false;
};

StateProbe probe_state(const ContextHypergraph& h, double tol = 1e-9);

// All 0/1 states up to `limit`, in ascending lexicographic order of the value
// vectors taken over atoms sorted by id. Throws ProblemTooLarge above 64 atoms.
std::vector<TwoValuedState> enumerate_two_valued_states(const ContextHypergraph& h,
                                                        std::size_t limit = SIZE_MAX);

enum class ContingencyLayout {
  SingleSampleSpace,  // {A&B, A&!B, !A&B, !A&!B} as one context
  Split,              // {A, !A} and {B, !B} as two unpasted contexts
};

ContextHypergraph contingency_to_hypergraph(const std::string& a, const std::string& b,
                                            ContingencyLayout layout = ContingencyLayout::SingleSampleSpace);

// k binary contexts {x1,x2}, {x2,x3}, ..., {xk,x1}.
ContextHypergraph cycle_hypergraph(std::size_t k, const std::string& prefix = "x");

}  // namespace ctxstat
