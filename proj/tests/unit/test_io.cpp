#include <gtest/gtest.h>

#include <cmath>

#include "ctxstat/error.hpp"
#include "ctxstat/io.hpp"
#include "ctxstat/synthgen.hpp"
#include "tmpdir.hpp"

namespace ctxstat {
namespace {

template <typename Fn>
void expect_parse_error(Fn&& fn, ErrorKind kind, std::size_t line, std::size_t column) {
  try {
    fn();
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(Joint, MinimalFile) {
  const auto d = io::parse_joint("A,B\n1,0\n");
  EXPECT_EQ(d.observables().ids(), (std::vector<std::string>{"A", "B"}));
  ASSERT_EQ(d.num_records(), 1u);
  EXPECT_EQ(d.value(0, 0), 1);
  EXPECT_EQ(d.value(0, 1), 0);
}

TEST(Joint, NonBinaryValuePosition) {
  expect_parse_error([] { io::parse_joint("A,B\n1,2\n"); }, ErrorKind::NonBinaryValue, 2, 3);
  expect_parse_error([] { io::parse_joint("A,B\n0,1\n\n  1, x\n"); }, ErrorKind::NonBinaryValue, 4, 6);
}

TEST(Joint, HeaderProblems) {
  expect_parse_error([] { io::parse_joint("A,B\n1,0,1\n"); }, ErrorKind::HeaderMismatch, 2, 1);
  expect_parse_error([] { io::parse_joint("A,A\n1,0\n"); }, ErrorKind::HeaderMismatch, 1, 1);
  expect_parse_error([] { io::parse_joint("A,,B\n"); }, ErrorKind::HeaderMismatch, 1, 3);
  expect_parse_error([] { io::parse_joint(""); }, ErrorKind::ParseError, 1, 1);
  expect_parse_error([] { io::parse_joint("A,B\n1,\n"); }, ErrorKind::ParseError, 2, 3);
}

TEST(Joint, WhitespaceAndCrlf) {
  const auto d = io::parse_joint(" A , B \r\n 0 ,1\r\n\r\n1,1");
  EXPECT_EQ(d.observables().ids(), (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(d.num_records(), 2u);
  EXPECT_EQ(d.value(1, 0), 1);
}

TEST(Joint, RoundTrip) {
  const auto s = gen_classical({5, std::nullopt, 200, 3});
  const auto text = io::format_joint(s.data);
  EXPECT_EQ(io::parse_joint(text), s.data);
  const auto dir = testing::scratch_dir("io_joint");
  io::write_file(dir / "records", text);
  EXPECT_EQ(io::read_joint(dir / "records"), s.data);
}

TEST(PairLog, ParsesAndOrdersByFirstAppearance) {
  const auto d = io::parse_pairlog("obs_a,val_a,obs_b,val_b\nB,1,A,0\nA,1,C,1\n");
  EXPECT_EQ(d.observables().ids(), (std::vector<std::string>{"B", "A", "C"}));
  ASSERT_EQ(d.entries().size(), 2u);
  EXPECT_EQ(d.entries()[0], (PairLogEntry{0, 1, 1, 0}));
  EXPECT_EQ(d.entries()[1], (PairLogEntry{1, 1, 2, 1}));
}

TEST(PairLog, Errors) {
  expect_parse_error([] { io::parse_pairlog("a,val_a,obs_b,val_b\n"); }, ErrorKind::HeaderMismatch, 1, 1);
  expect_parse_error([] { io::parse_pairlog("obs_a,val_a,obs_b\n"); }, ErrorKind::HeaderMismatch, 1, 1);
  expect_parse_error([] { io::parse_pairlog("obs_a,val_a,obs_b,val_b\nA,1,B\n"); },
                     ErrorKind::HeaderMismatch, 2, 1);
  expect_parse_error([] { io::parse_pairlog("obs_a,val_a,obs_b,val_b\nA,1,B,3\n"); },
                     ErrorKind::NonBinaryValue, 2, 7);
  expect_parse_error([] { io::parse_pairlog("obs_a,val_a,obs_b,val_b\nA,1,A,0\n"); }, ErrorKind::ParseError,
                     2, 5);
}

TEST(PairLog, RoundTrip) {
  const auto s = gen_quantum({{0, 50, 170, 300}, {}, 300, 11});
  const auto text = io::format_pairlog(s.data);
  EXPECT_EQ(io::parse_pairlog(text), s.data);
}

TEST(Exact, RoundTripBothKinds) {
  const auto c = gen_classical({4, std::nullopt, 0, 8});
  const auto parsed_c = std::get<ExactJointModel>(io::parse_exact(io::format_exact(c.exact)));
  EXPECT_EQ(parsed_c.observables, c.exact.observables);
  EXPECT_EQ(parsed_c.table, c.exact.table);

  const std::vector<double> angles{0, 33.5, 271};
  const auto q = gen_quantum({angles, {}, 0, 0});
  const auto parsed_q = std::get<ExactPairModel>(io::parse_exact(io::format_exact(q.exact, angles)));
  EXPECT_EQ(parsed_q.observables, q.exact.observables);
  EXPECT_EQ(parsed_q.same_outcome, q.exact.same_outcome);
}

TEST(Exact, Errors) {
  EXPECT_THROW(io::parse_exact("{"), Error);
  EXPECT_THROW(io::parse_exact(R"({"kind":"other","observables":["A"]})"), Error);
  EXPECT_THROW(io::parse_exact(R"({"kind":"classical","observables":["A"],"table":[1]})"), Error);
  try {
    io::parse_exact(R"({"kind":"quantum","observables":["A","B"],"pairs":[{"a":"A","b":"Z","same_outcome":1}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownObservable);
  }
}

TEST(Hypergraph, ParseAndFormat) {
  const auto h = io::parse_hypergraph(
      "# triangle\n"
      "atom a b c   # three atoms\n"
      "context a b\n"
      "context b c\n"
      "context c a\n");
  EXPECT_EQ(h.atoms, (std::vector<std::string>{"a", "b", "c"}));
  ASSERT_EQ(h.contexts.size(), 3u);
  EXPECT_EQ(h.contexts[2], (std::vector<std::size_t>{2, 0}));
  const auto again = io::parse_hypergraph(io::format_hypergraph(h));
  EXPECT_EQ(again.atoms, h.atoms);
  EXPECT_EQ(again.contexts, h.contexts);
}

TEST(Hypergraph, Errors) {
  expect_parse_error([] { io::parse_hypergraph("atom a\ncontext a b\n"); }, ErrorKind::ParseError, 2, 11);
  expect_parse_error([] { io::parse_hypergraph("atom a a\n"); }, ErrorKind::ParseError, 1, 8);
  expect_parse_error([] { io::parse_hypergraph("atom a\nedge a\n"); }, ErrorKind::ParseError, 2, 1);
}

TEST(LpProblem, Parse) {
  const auto p = io::parse_lp_problem(R"({
    "observables": ["A", "B", "C"],
    "pairs": [
      {"a": "B", "b": "A", "table": [[0.125, 0.375], [0.375, 0.125]]},
      {"a": "C", "b": "B", "table": [[0.125, 0.375], [0.375, 0.125]]},
      {"a": "A", "b": "C", "table": [[0.125, 0.375], [0.375, 0.125]]}
    ]})");
  EXPECT_EQ(p.num_observables, 3u);
  EXPECT_EQ(p.num_outcomes, 2u);
  EXPECT_EQ(p.tolerance, kDefaultTolLp);
  EXPECT_EQ(p.pair_marginals.size(), 3u);
  EXPECT_EQ(p.pair_marginals.at({1, 0}).values[1], 0.375);
  EXPECT_FALSE(decide_feasibility(p).feasible);
}

TEST(LpProblem, Errors) {
  EXPECT_THROW(io::parse_lp_problem(R"({"observables":["A","B"],"pairs":[{"a":"A","b":"B","table":[[1]]}]})"),
               Error);
  EXPECT_THROW(
      io::parse_lp_problem(R"({"observables":["A","B"],"pairs":[{"a":"A","b":"B","table":[[0.5,0],[0,0.6]]}]})"),
      Error);
  EXPECT_THROW(io::parse_lp_problem(R"({"pairs":[]})"), Error);
}

TEST(Files, MissingFileIsIoError) {
  try {
    io::read_file("/nonexistent/ctxstat/file");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

TEST(Round12, Behaviour) {
  EXPECT_EQ(io::round12(0.1 + 0.2), 0.3);
  EXPECT_EQ(io::round12(1.0 / 3.0), 0.333333333333);
  EXPECT_FALSE(std::signbit(io::round12(-0.0)));
  EXPECT_EQ(io::format12(-0.0), "0");
  EXPECT_EQ(io::format12(0.25), "0.25");
  EXPECT_EQ(io::format12(1e-9), "1e-09");
}

}  // namespace
}  // namespace ctxstat
