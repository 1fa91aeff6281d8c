#include "ctxstat/report.hpp"

#include "ctxstat/io.hpp"
#include "json.hpp"

namespace ctxstat {
namespace {

using nlohmann::ordered_json;

ordered_json interval_json(const Interval& ci) {
  return ordered_json::array({io::round12(ci.lower), io::round12(ci.upper)});
}

ordered_json analysis_json(const std::array<std::string, 3>& ids, const TripleAnalysis& a) {
  ordered_json j;
  j["ids"] = ids;
  j["p"] = io::round12(a.params.p);
  j["q"] = io::round12(a.params.q);
  j["r"] = io::round12(a.params.r);
  j["deviations"] = ordered_json::array({io::round12(a.params.deviations[0]),
                                         io::round12(a.params.deviations[1]),
                                         io::round12(a.params.deviations[2])});
  j["applicable"] = a.params.applicable;
  j["accardi"] = {{"verdict", std::string(to_string(a.accardi.verdict))},
                  {"lower", io::round12(a.accardi.lower)},
                  {"upper", io::round12(a.accardi.upper)},
                  {"slack", io::round12(a.accardi.slack)}};
  j["lp"] = {{"feasible", a.lp.feasible},
             {"max_violation", io::round12(a.lp.max_violation)},
             {"raw_residual", io::round12(a.lp.raw_residual)}};
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string write_json(const AnalysisReport& report) {
  const auto& plan = report.run.plan;
  const auto& e = report.run.estimate;
  ordered_json j;
  j["config"] = {{"mode", std::string(to_string(plan.mode))},
                 {"num_triples", plan.num_triples ? ordered_json(*plan.num_triples) : ordered_json()},
                 {"seed", plan.seed},
                 {"smoothing", io::round12(plan.tolerances.smoothing)},
                 {"tol_b", io::round12(plan.tolerances.tol_b)},
                 {"tol_lp", io::round12(plan.tolerances.tol_lp)}};
  j["summary"] = {{"sampled", e.sampled},
                  {"decided", e.decided},
                  {"applicable", e.applicable},
                  {"skipped", e.skipped},
                  {"accardi_violations", e.accardi_violations},
                  {"lp_violations", e.lp_violations},
                  {"pers_accardi", io::round12(e.pers_accardi)},
                  {"pers_accardi_all", io::round12(e.pers_accardi_all)},
                  {"pers_lp", io::round12(e.pers_lp)},
                  {"ci95",
                   {{"pers_accardi", interval_json(e.ci95_accardi)},
                    {"pers_accardi_all", interval_json(e.ci95_accardi_all)},
                    {"pers_lp", interval_json(e.ci95_lp)}}}};
  ordered_json triples = ordered_json::array();
  ordered_json skipped = ordered_json::array();
  for (const auto& t : report.run.triples) {
    if (t.analysis) {
      triples.push_back(analysis_json(t.ids, *t.analysis));
    } else {
      skipped.push_back({{"ids", t.ids},
                         {"kind", std::string(to_string(t.error_kind.value_or(ErrorKind::InvalidInput)))},
                         {"reason", t.error}});
    }
  }
  j["triples"] = std::move(triples);
  j["skipped"] = std::move(skipped);
  if (report.metadata) {
    j["run"] = {{"threads", report.metadata->threads},
                {"input", report.metadata->input},
                {"input_format", report.metadata->input_format}};
  }
  return j.dump(2) + "\n";
}

std::string write_csv(const AnalysisReport& report) {
  const auto& plan = report.run.plan;
  const auto& e = report.run.estimate;
  std::string out;
  auto comment = [&](const std::string& key, const std::string& value) {
    out += "# " + key + "=" + value + "\n";
  };
  comment("mode", std::string(to_string(plan.mode)));
  comment("seed", std::to_string(plan.seed));
  comment("smoothing", io::format12(plan.tolerances.smoothing));
  comment("tol_b", io::format12(plan.tolerances.tol_b));
  comment("tol_lp", io::format12(plan.tolerances.tol_lp));
  comment("sampled", std::to_string(e.sampled));
  comment("decided", std::to_string(e.decided));
  comment("applicable", std::to_string(e.applicable));
  comment("skipped", std::to_string(e.skipped));
  comment("accardi_violations", std::to_string(e.accardi_violations));
  comment("lp_violations", std::to_string(e.lp_violations));
  comment("pers_accardi", io::format12(e.pers_accardi));
  comment("pers_accardi_all", io::format12(e.pers_accardi_all));
  comment("pers_lp", io::format12(e.pers_lp));
  comment("ci95_pers_accardi", io::format12(e.ci95_accardi.lower) + ";" + io::format12(e.ci95_accardi.upper));
  comment("ci95_pers_lp", io::format12(e.ci95_lp.lower) + ";" + io::format12(e.ci95_lp.upper));
  out +=
      "index,a,b,c,status,p,q,r,delta_p,delta_q,delta_r,applicable,accardi_verdict,lower,upper,"
      "slack,lp_feasible,lp_max_violation,lp_raw_residual,error\n";
  for (std::size_t i = 0; i < report.run.triples.size(); ++i) {
    const auto& t = report.run.triples[i];
    out += std::to_string(i) + "," + csv_escape(t.ids[0]) + "," + csv_escape(t.ids[1]) + "," +
           csv_escape(t.ids[2]) + ",";
    if (!t.analysis) {
      out += "skipped" + std::string(15, ',') + csv_escape(t.error) + "\n";
      continue;
    }
    const auto& a = *t.analysis;
    out += "decided," + io::format12(a.params.p) + "," + io::format12(a.params.q) + "," +
           io::format12(a.params.r) + "," + io::format12(a.params.deviations[0]) + "," +
           io::format12(a.params.deviations[1]) + "," + io::format12(a.params.deviations[2]) + "," +
           (a.params.applicable ? "true" : "false") + "," + std::string(to_string(a.accardi.verdict)) +
           "," + io::format12(a.accardi.lower) + "," + io::format12(a.accardi.upper) + "," +
           io::format12(a.accardi.slack) + "," + (a.lp.feasible ? "true" : "false") + "," +
           io::format12(a.lp.max_violation) + "," + io::format12(a.lp.raw_residual) + ",\n";
  }
  if (report.metadata) {
    out += "# run threads=" + std::to_string(report.metadata->threads) +
           " input=" + report.metadata->input + " input_format=" + report.metadata->input_format + "\n";
  }
  return out;
}

}  // namespace

std::string write_report(const AnalysisReport& report, ReportFormat format) {
  return format == ReportFormat::Json ? write_json(report) : write_csv(report);
}

std::string triple_json(const std::array<std::string, 3>& ids, const TripleAnalysis& analysis) {
  return analysis_json(ids, analysis).dump(2) + "\n";
}

}  // namespace ctxstat
