#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ctxstat {

// A named yes/no property of records.
struct BinaryObservable {
  std::string id;
  std::array<std::string, 2> value_labels{"0", "1"};

  friend bool operator==(const BinaryObservable&, const BinaryObservable&) = default;
};

// Ordered set of observables with distinct ids. Construction validates.
class ObservableSet {
 public:
  ObservableSet() = default;
  explicit ObservableSet(std::vector<BinaryObservable> observables, std::string source = {});
  static ObservableSet from_ids(const std::vector<std::string>& ids, std::string source = {});

  std::size_t size() const noexcept { return observables_.size(); }
  const BinaryObservable& operator[](std::size_t i) const { return observables_[i]; }
  const std::vector<BinaryObservable>& observables() const noexcept { return observables_; }
  const std::string& source() const noexcept { return source_; }

  std::optional<std::size_t> find(const std::string& id) const;
  // Throws UnknownObservable.
  std::size_t index_of(const std::string& id) const;
  std::vector<std::string> ids() const;

  friend bool operator==(const ObservableSet& a, const ObservableSet& b) {
    return a.observables_ == b.observables_;
  }

 private:
  std::vector<BinaryObservable> observables_;
  std::string source_;
};

// One elementary outcome per record; stored row-major, T bits per record.
class JointRecordDataset {
 public:
  JointRecordDataset() = default;
  explicit JointRecordDataset(ObservableSet observables) : observables_(std::move(observables)) {}

  const ObservableSet& observables() const noexcept { return observables_; }
  std::size_t num_records() const noexcept {
    return observables_.size() == 0 ? 0 : bits_.size() / observables_.size();
  }
  // Throws InvalidInput on wrong length or non-binary value.
  void add_record(std::span<const std::uint8_t> record);
  std::span<const std::uint8_t> record(std::size_t i) const {
    return {bits_.data() + i * observables_.size(), observables_.size()};
  }
  std::uint8_t value(std::size_t record, std::size_t observable) const {
    return bits_[record * observables_.size() + observable];
  }

  friend bool operator==(const JointRecordDataset&, const JointRecordDataset&) = default;

 private:
  ObservableSet observables_;
  std::vector<std::uint8_t> bits_;
};

struct PairLogEntry {
  std::uint32_t obs_a = 0;
  std::uint8_t value_a = 0;
  std::uint32_t obs_b = 0;
  std::uint8_t value_b = 0;

  friend bool operator==(const PairLogEntry&, const PairLogEntry&) = default;
};

// Pairwise measurement logs with no global record per trial.
class PairLogDataset {
 public:
  PairLogDataset() = default;
  explicit PairLogDataset(ObservableSet observables) : observables_(std::move(observables)) {}

  const ObservableSet& observables() const noexcept { return observables_; }
  const std::vector<PairLogEntry>& entries() const noexcept { return entries_; }
  // Throws InvalidInput for unknown indices, a == b, or non-binary values.
  void add_entry(const PairLogEntry& entry);

  friend bool operator==(const PairLogDataset&, const PairLogDataset&) = default;

 private:
  ObservableSet observables_;
  std::vector<PairLogEntry> entries_;
};

// Exact probability table over {0,1}^T. Observable 0 is the most significant
// bit of the outcome index.
struct ExactJointModel {
  ObservableSet observables;
  std::vector<double> table;

  std::size_t outcome_bit(std::size_t outcome, std::size_t observable) const {
    return (outcome >> (observables.size() - 1 - observable)) & 1u;
  }
};

// Analytic same-outcome probability for each measured pair, with uniform
// priors (maximally mixed preparation).
struct ExactPairModel {
  ObservableSet observables;
  std::map<std::pair<std::size_t, std::size_t>, double> same_outcome;  // key: (min, max)
};

using DataSource = std::variant<JointRecordDataset, PairLogDataset, ExactJointModel, ExactPairModel>;

const ObservableSet& observables_of(const DataSource& source);

}  // namespace ctxstat
