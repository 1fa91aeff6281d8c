#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "ctxstat/report.hpp"
#include "ctxstat/synthgen.hpp"
#include "json.hpp"

namespace ctxstat {
namespace {

using nlohmann::json;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

AnalysisReport trine_report() {
  const auto s = gen_quantum({{0, 120, 240}, {}, 0, 0});
  SamplingPlan plan;
  plan.mode = SamplingMode::Exhaustive;
  return {estimate_pers(s.exact, plan, 1), std::nullopt};
}

TEST(Report, EmptyRun) {
  AnalysisReport report;
  report.run.estimate = summarize({}, 0);
  const auto j = json::parse(write_report(report, ReportFormat::Json));
  EXPECT_EQ(j["summary"]["sampled"], 0);
  EXPECT_TRUE(j["triples"].empty());
  EXPECT_EQ(j["summary"]["ci95"]["pers_lp"], json::array({0, 1}));
  const auto csv = lines_of(write_report(report, ReportFormat::Csv));
  ASSERT_FALSE(csv.empty());
  EXPECT_EQ(csv.back().rfind("index,", 0), 0u);
}

TEST(Report, TrineRow) {
  const auto j = json::parse(write_report(trine_report(), ReportFormat::Json));
  ASSERT_EQ(j["triples"].size(), 1u);
  const auto& t = j["triples"][0];
  EXPECT_EQ(t["ids"], json::array({"Q0", "Q1", "Q2"}));
  EXPECT_EQ(t["accardi"]["verdict"], "contextual");
  EXPECT_NEAR(t["accardi"]["slack"].get<double>(), -0.25, 1e-12);
  EXPECT_FALSE(t["lp"]["feasible"].get<bool>());
  EXPECT_EQ(j["summary"]["pers_accardi"], 1);
  EXPECT_EQ(j["summary"]["pers_lp"], 1);
  EXPECT_EQ(j.begin().key(), "config");
}

TEST(Report, DeterministicBytes) {
  const auto a = trine_report();
  const auto b = trine_report();
  for (auto f : {ReportFormat::Json, ReportFormat::Csv}) EXPECT_EQ(write_report(a, f), write_report(b, f));
}

TEST(Report, CountsMatchTripleTable) {
  const auto s = gen_quantum({{0, 30, 75, 140, 200, 260, 320}, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4},
                                                                 {2, 4}, {4, 5}, {5, 6}, {4, 6}, {0, 6}},
                              2000, 21});
  SamplingPlan plan;
  plan.mode = SamplingMode::Exhaustive;
  AnalysisReport report{estimate_pers(s.data, plan, 2), RunMetadata{2, "in", "pairlog"}};
  const auto j = json::parse(write_report(report, ReportFormat::Json));
  std::size_t contextual = 0, applicable = 0, infeasible = 0;
  for (const auto& t : j["triples"]) {
    applicable += t["applicable"].get<bool>();
    contextual += t["accardi"]["verdict"] == "contextual";
    infeasible += !t["lp"]["feasible"].get<bool>();
  }
  const auto& sum = j["summary"];
  EXPECT_EQ(sum["sampled"].get<std::size_t>(), j["triples"].size() + j["skipped"].size());
  EXPECT_EQ(sum["decided"].get<std::size_t>(), j["triples"].size());
  EXPECT_EQ(sum["skipped"].get<std::size_t>(), j["skipped"].size());
  EXPECT_GT(j["skipped"].size(), 0u);
  EXPECT_EQ(sum["applicable"].get<std::size_t>(), applicable);
  EXPECT_EQ(sum["accardi_violations"].get<std::size_t>(), contextual);
  EXPECT_EQ(sum["lp_violations"].get<std::size_t>(), infeasible);
  EXPECT_EQ(j["run"]["threads"], 2);

  const auto csv = lines_of(write_report(report, ReportFormat::Csv));
  std::size_t rows = 0;
  bool header_seen = false;
  for (const auto& line : csv) {
    if (line.rfind("#", 0) == 0) continue;
    // The error column is last, so commas inside it do not count.
    const auto quote = line.find('"');
    const auto end = quote == std::string::npos ? line.end() : line.begin() + static_cast<std::ptrdiff_t>(quote);
    EXPECT_EQ(std::count(line.begin(), end, ','), 19) << line;
    if (!header_seen) {
      header_seen = true;
    } else {
      ++rows;
    }
  }
  EXPECT_EQ(rows, sum["sampled"].get<std::size_t>());
}

TEST(Report, TripleJson) {
  const auto run = trine_report().run;
  const auto j = json::parse(triple_json(run.triples[0].ids, *run.triples[0].analysis));
  EXPECT_NEAR(j["p"].get<double>(), 0.25, 1e-12);
  EXPECT_EQ(j["deviations"].size(), 3u);
}

}  // namespace
}  // namespace ctxstat
