#include "ctxstat/dataset.hpp"

#include <set>

#include "ctxstat/error.hpp"

namespace ctxstat {

ObservableSet::ObservableSet(std::vector<BinaryObservable> observables, std::string source)
    : observables_(std::move(observables)), source_(std::move(source)) {
  std::set<std::string> seen;
  for (const auto& obs : observables_) {
    if (obs.id.empty()) throw Error(ErrorKind::InvalidInput, "observable id must be non-empty");
    if (obs.value_labels[0] == obs.value_labels[1]) {
      throw Error(ErrorKind::InvalidInput, "observable '" + obs.id + "' has identical outcome labels");
    }
    if (!seen.insert(obs.id).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate observable id '" + obs.id + "'");
    }
  }
}

ObservableSet ObservableSet::from_ids(const std::vector<std::string>& ids, std::string source) {
  std::vector<BinaryObservable> obs;
  obs.reserve(ids.size());
  for (const auto& id : ids) obs.push_back(BinaryObservable{id});
  return ObservableSet(std::move(obs), std::move(source));
}

std::optional<std::size_t> ObservableSet::find(const std::string& id) const {
  for (std::size_t i = 0; i < observables_.size(); ++i) {
    if (observables_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t ObservableSet::index_of(const std::string& id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorKind::UnknownObservable, "no observable named '" + id + "'");
}

std::vector<std::string> ObservableSet::ids() const {
  std::vector<std::string> out;
  out.reserve(observables_.size());
  for (const auto& obs : observables_) out.push_back(obs.id);
  return out;
}

void JointRecordDataset::add_record(std::span<const std::uint8_t> record) {
  if (record.size() != observables_.size()) {
    throw Error(ErrorKind::InvalidInput, "record has " + std::to_string(record.size()) +
                                             " entries, expected " +
                                             std::to_string(observables_.size()));
  }
  for (auto v : record) {
    if (v > 1) throw Error(ErrorKind::NonBinaryValue, "record value must be 0 or 1");
  }
  bits_.insert(bits_.end(), record.begin(), record.end());
}

void PairLogDataset::add_entry(const PairLogEntry& entry) {
  const auto t = observables_.size();
  if (entry.obs_a >= t || entry.obs_b >= t) {
    throw Error(ErrorKind::UnknownObservable, "pair-log entry references an unknown observable");
  }
  if (entry.obs_a == entry.obs_b) {
    throw Error(ErrorKind::InvalidInput, "pair-log entry pairs an observable with itself");
  }
  if (entry.value_a > 1 || entry.value_b > 1) {
    throw Error(ErrorKind::NonBinaryValue, "pair-log value must be 0 or 1");
  }
  entries_.push_back(entry);
}

const ObservableSet& observables_of(const DataSource& source) {
  return std::visit([](const auto& s) -> const ObservableSet& {
    if constexpr (requires { s.observables(); }) {
      return s.observables();
    } else {
      return s.observables;
    }
  }, source);
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return "UsageError";
    case ErrorKind::UnknownObservable: return "UnknownObservable";
    case ErrorKind::EmptyPairData: return "EmptyPairData";
    case ErrorKind::ZeroConditioningRow: return "ZeroConditioningRow";
    case ErrorKind::PairMismatch: return "PairMismatch";
    case ErrorKind::InconsistentOrientations: return "InconsistentOrientations";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ProblemTooLarge: return "ProblemTooLarge";
    case ErrorKind::SolverFailure: return "SolverFailure";
    case ErrorKind::TooFewObservables: return "TooFewObservables";
    case ErrorKind::SampleExceedsPopulation: return "SampleExceedsPopulation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonBinaryValue: return "NonBinaryValue";
    case ErrorKind::HeaderMismatch: return "HeaderMismatch";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

}  // namespace ctxstat
