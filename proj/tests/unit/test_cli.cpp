#include <gtest/gtest.h>

#include <sstream>

#include "ctxstat/cli.hpp"
#include "ctxstat/error.hpp"
#include "ctxstat/io.hpp"
#include "json.hpp"
#include "tmpdir.hpp"

namespace ctxstat {
namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = cli_main(args, out, err);
  return {status, out.str(), err.str()};
}

TEST(Cli, QuantumTrineEndToEnd) {
  const auto dir = testing::scratch_dir("cli_trine");
  const auto gen = run({"gen", "quantum", "--angles", "0,120,240", "--n", "100000", "--seed", "7", "--out",
                        dir.string()});
  ASSERT_EQ(gen.status, 0) << gen.err;
  const auto pers = run({"pers", "--input", (dir / "pairs").string(), "--input-format", "pairlog"});
  ASSERT_EQ(pers.status, 0) << pers.err;
  const auto j = nlohmann::json::parse(pers.out);
  EXPECT_EQ(j["summary"]["pers_accardi"], 1);
  EXPECT_EQ(j["summary"]["pers_lp"], 1);

  const auto exact = run({"triple", "--input", (dir / "exact.json").string(), "--input-format", "exact", "--ids",
                          "Q0,Q1,Q2"});
  ASSERT_EQ(exact.status, 0) << exact.err;
  EXPECT_NEAR(nlohmann::json::parse(exact.out)["accardi"]["slack"].get<double>(), -0.25, 1e-12);
}

TEST(Cli, ClassicalGenAndCsvToFile) {
  const auto dir = testing::scratch_dir("cli_classical");
  ASSERT_EQ(run({"gen", "classical", "-T", "5", "--n", "2000", "--seed", "3", "--out", dir.string()}).status, 0);
  const auto report = dir / "report.csv";
  const auto r = run({"pers", "--input", (dir / "records").string(), "--mode", "exhaustive", "--format", "csv",
                      "--out", report.string(), "--threads", "2"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(io::read_file(report).find("# sampled=10\n"), std::string::npos);
}

TEST(Cli, GreechieTriangle) {
  const auto dir = testing::scratch_dir("cli_greechie");
  io::write_file(dir / "tri.txt", "atom a b c\ncontext a b\ncontext b c\ncontext a c\n");
  const auto r = run({"greechie", (dir / "tri.txt").string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("valid: yes"), std::string::npos);
  EXPECT_NE(r.out.find("state: a=0.5 b=0.5 c=0.5"), std::string::npos);
  EXPECT_NE(r.out.find("states: exists; two-valued states: 0"), std::string::npos);
}

TEST(Cli, LpCommand) {
  const auto dir = testing::scratch_dir("cli_lp");
  io::write_file(dir / "p.json", R"({"observables":["A","B"],
    "pairs":[{"a":"A","b":"B","table":[[0.5,0],[0,0.5]]}]})");
  const auto r = run({"lp", (dir / "p.json").string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["feasible"].get<bool>());
  EXPECT_EQ(j["witness"].size(), 4u);
}

TEST(Cli, TooFewObservablesIsDataError) {
  const auto dir = testing::scratch_dir("cli_small");
  io::write_file(dir / "d.csv", "A,B\n0,1\n1,1\n");
  const auto r = run({"pers", "--input", (dir / "d.csv").string()});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 1);
  EXPECT_EQ(run({"bogus"}).status, 1);
  EXPECT_EQ(run({"pers"}).status, 1);
  EXPECT_EQ(run({"pers", "--input", "x", "--mode", "sometimes"}).status, 1);
  EXPECT_EQ(run({"triple", "--input", "x", "--ids", "A,B"}).status, 1);
  EXPECT_EQ(run({"gen", "quantum", "--angles", "0,x", "--out", "o"}).status, 1);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, DataErrors) {
  const auto dir = testing::scratch_dir("cli_data");
  EXPECT_EQ(run({"pers", "--input", (dir / "missing").string()}).status, 2);
  io::write_file(dir / "bad.csv", "A,B,C\n0,1,7\n");
  const auto r = run({"pers", "--input", (dir / "bad.csv").string()});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("line 2, column 5"), std::string::npos) << r.err;
  io::write_file(dir / "d.csv", "A,B,C\n0,1,1\n");
  EXPECT_EQ(run({"triple", "--input", (dir / "d.csv").string(), "--ids", "A,B,Z"}).status, 2);
}

TEST(Cli, ExitStatusMapping) {
  EXPECT_EQ(exit_status_for(ErrorKind::Usage), 1);
  EXPECT_EQ(exit_status_for(ErrorKind::SolverFailure), 3);
  for (auto k : {ErrorKind::UnknownObservable, ErrorKind::EmptyPairData, ErrorKind::ZeroConditioningRow,
                 ErrorKind::PairMismatch, ErrorKind::InconsistentOrientations, ErrorKind::InvalidInput,
                 ErrorKind::ProblemTooLarge, ErrorKind::TooFewObservables, ErrorKind::SampleExceedsPopulation,
                 ErrorKind::ParseError, ErrorKind::NonBinaryValue, ErrorKind::HeaderMismatch, ErrorKind::Io}) {
    EXPECT_EQ(exit_status_for(k), 2) << to_string(k);
  }
}

}  // namespace
}  // namespace ctxstat
