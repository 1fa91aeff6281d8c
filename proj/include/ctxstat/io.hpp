#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ctxstat/dataset.hpp"
#include "ctxstat/greechie.hpp"
#include "ctxstat/kolmo_lp.hpp"

namespace ctxstat::io {

// Joint records: a comma-separated header of observable names, then one
// comma-separated row of 0/1 values per record.
JointRecordDataset parse_joint(std::string_view text, const std::string& source = {});
JointRecordDataset read_joint(const std::filesystem::path& path);
std::string format_joint(const JointRecordDataset& data);

// Pair log: header `obs_a,val_a,obs_b,val_b`, one measured pair per line.
// Observables are registered in order of first appearance.
PairLogDataset parse_pairlog(std::string_view text, const std::string& source = {});
PairLogDataset read_pairlog(const std::filesystem::path& path);
std::string format_pairlog(const PairLogDataset& data);

// Exact generator tables (JSON). Yields ExactJointModel or ExactPairModel.
DataSource parse_exact(std::string_view text, const std::string& source = {});
DataSource read_exact(const std::filesystem::path& path);
std::string format_exact(const ExactJointModel& model);
std::string format_exact(const ExactPairModel& model, const std::vector<double>& angles_deg);

// Hypergraph text: `atom a b ...` and `context a b ...` lines, `#` comments.
ContextHypergraph parse_hypergraph(std::string_view text);
ContextHypergraph read_hypergraph(const std::filesystem::path& path);
std::string format_hypergraph(const ContextHypergraph& h);

// Explicit pair-marginal problem (JSON):
//   {"observables": [...], "outcomes": n, "tolerance": eps,
//    "pairs": [{"a": id, "b": id, "table": [[...], ...]}, ...]}
JointFeasibilityProblem parse_lp_problem(std::string_view text);
JointFeasibilityProblem read_lp_problem(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// 12 significant digits; -0 becomes 0.
double round12(double v);
std::string format12(double v);

}  // namespace ctxstat::io
