#pragma once

#include <optional>
#include <string>

#include "ctxstat/pers.hpp"

namespace ctxstat {

struct RunMetadata {
  std::size_t threads = 1;
  std::string input;
  std::string input_format;
};

struct AnalysisReport {
  PersRun run;
  std::optional<RunMetadata> metadata;  // excluded from the deterministic body
};

enum class ReportFormat { Json, Csv };

// Stable key order, 12 significant digits, no timestamps. The optional
// metadata block is appended last as "run" (JSON) or a trailing comment (CSV).
std::string write_report(const AnalysisReport& report, ReportFormat format);

// JSON for a single triple analysis, as printed by the `triple` command.
std::string triple_json(const std::array<std::string, 3>& ids, const TripleAnalysis& analysis);

}  // namespace ctxstat
