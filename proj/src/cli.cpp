#include "ctxstat/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ctxstat/error.hpp"
#include "ctxstat/greechie.hpp"
#include "ctxstat/io.hpp"
#include "ctxstat/kolmo_lp.hpp"
#include "ctxstat/pers.hpp"
#include "ctxstat/report.hpp"
#include "ctxstat/synthgen.hpp"
#include "json.hpp"

namespace ctxstat {
namespace {

namespace fs = std::filesystem;

struct InputOptions {
  std::string path;
  std::string format = "joint";
};

struct ToleranceOptions {
  double smoothing = 0.0;
  double tol_b = kDefaultTolB;
  double tol_lp = kDefaultTolLp;

  AnalysisTolerances get() const { return {smoothing, tol_b, tol_lp}; }
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.path, "Dataset file")->required();
  cmd->add_option("--input-format", in.format, "joint, pairlog or exact")
      ->check(CLI::IsMember({"joint", "pairlog", "exact"}));
}

void add_tolerances(CLI::App* cmd, ToleranceOptions& tol) {
  cmd->add_option("--smoothing", tol.smoothing, "Additive smoothing alpha")->check(CLI::NonNegativeNumber);
  cmd->add_option("--tol-b", tol.tol_b, "Bistochastic tolerance")->check(CLI::NonNegativeNumber);
  cmd->add_option("--tol-lp", tol.tol_lp, "LP feasibility tolerance")->check(CLI::NonNegativeNumber);
}

DataSource load(const InputOptions& in) {
  if (in.format == "pairlog") return io::read_pairlog(in.path);
  if (in.format == "exact") return io::read_exact(in.path);
  return io::read_joint(in.path);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string trim_trailing(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

std::string state_line(const ContextHypergraph& h, const State& s) {
  std::string line = "state:";
  for (std::size_t a = 0; a < h.atoms.size(); ++a) line += " " + h.atoms[a] + "=" + io::format12(s.values[a]);
  return line;
}

void print_validation(const ContextHypergraph& h, const ValidationReport& v, std::ostream& out) {
  out << "valid: " << (v.valid() ? "yes" : "no") << "\n";
  for (auto a : v.uncovered_atoms) out << "  uncovered atom: " << h.atoms[a] << "\n";
  for (auto [i, j] : v.subset_contexts) out << "  context " << i << " is contained in context " << j << "\n";
  for (const auto& a : v.duplicate_atoms) out << "  duplicate atom: " << a << "\n";
  for (auto [i, j] : v.duplicate_contexts) out << "  contexts " << i << " and " << j << " coincide\n";
  for (auto c : v.small_contexts) out << "  context " << c << " has fewer than two atoms\n";
  for (auto c : v.repeated_members) out << "  context " << c << " lists an atom twice\n";
  out << "components: " << v.components << (v.unpasted() ? " (unpasted)" : "") << "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Contextuality statistics for binary-observable data", "ctxstat"};
  app.require_subcommand(1);

  // pers
  auto* pers = app.add_subcommand("pers", "Estimate the personalization rate over sampled triples");
  InputOptions pers_in;
  ToleranceOptions pers_tol;
  std::optional<std::uint64_t> pers_triples;
  std::string pers_mode = "without_replacement";
  std::uint64_t pers_seed = 0;
  std::string pers_format = "json";
  std::string pers_out;
  std::size_t pers_threads = 0;
  bool pers_meta = false;
  add_input(pers, pers_in);
  add_tolerances(pers, pers_tol);
  pers->add_option("--triples", pers_triples, "Number of triples to sample");
  pers->add_option("--mode", pers_mode, "without_replacement, with_replacement or exhaustive")
      ->check(CLI::IsMember({"without_replacement", "with_replacement", "exhaustive"}));
  pers->add_option("--seed", pers_seed, "Sampling seed");
  pers->add_option("--format", pers_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  pers->add_option("--out", pers_out, "Report path (default: stdout)");
  pers->add_option("--threads", pers_threads, "Worker threads (default: CTXSTAT_THREADS or all cores)");
  pers->add_flag("--run-metadata", pers_meta, "Append a run metadata block");

  // triple
  auto* triple = app.add_subcommand("triple", "Analyse one triple of observables");
  InputOptions triple_in;
  ToleranceOptions triple_tol;
  std::string triple_ids;
  add_input(triple, triple_in);
  add_tolerances(triple, triple_tol);
  triple->add_option("--ids", triple_ids, "Comma-separated A,B,C")->required();

  // lp
  auto* lp = app.add_subcommand("lp", "Decide a pair-marginal problem from a JSON file");
  std::string lp_path;
  std::optional<double> lp_tol;
  lp->add_option("problem", lp_path, "Problem file")->required();
  lp->add_option("--tol-lp", lp_tol, "Override the file's tolerance")->check(CLI::NonNegativeNumber);

  // greechie
  auto* gh = app.add_subcommand("greechie", "Validate a context hypergraph and search for states");
  std::string gh_path;
  std::size_t gh_limit = 1000;
  gh->add_option("hypergraph", gh_path, "Hypergraph file")->required();
  gh->add_option("--enumerate-limit", gh_limit, "Maximum two-valued states to enumerate");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate synthetic datasets");
  gen->require_subcommand(1);
  auto* gen_c = gen->add_subcommand("classical", "Joint records from a single sample space");
  std::size_t gc_t = 3;
  std::size_t gc_n = 1000;
  std::uint64_t gc_seed = 0;
  std::string gc_table;
  std::string gc_out;
  gen_c->add_option("--observables,-T", gc_t, "Number of observables")->check(CLI::Range(1, 16));
  gen_c->add_option("--n", gc_n, "Records to emit");
  gen_c->add_option("--seed", gc_seed, "Seed");
  gen_c->add_option("--table", gc_table, "JSON array with the 2^T joint probabilities (default: random)");
  gen_c->add_option("--out", gc_out, "Output directory")->required();

  auto* gen_q = gen->add_subcommand("quantum", "Pairwise qubit measurement logs");
  std::string gq_angles;
  std::string gq_pairs;
  std::size_t gq_n = 1000;
  std::uint64_t gq_seed = 0;
  std::string gq_out;
  gen_q->add_option("--angles", gq_angles, "Comma-separated angles in degrees")->required();
  gen_q->add_option("--pairs", gq_pairs, "Comma-separated index pairs, e.g. 0-1,1-2 (default: all)");
  gen_q->add_option("--n", gq_n, "Measurements per pair");
  gen_q->add_option("--seed", gq_seed, "Seed");
  gen_q->add_option("--out", gq_out, "Output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    std::ostringstream diag;
    const int code = app.exit(e, out, diag);
    if (code != static_cast<int>(CLI::ExitCodes::Success)) {
      throw Error(ErrorKind::Usage, trim_trailing(diag.str()));
    }
    return kExitOk;
  }

  if (pers->parsed()) {
    SamplingPlan plan;
    plan.num_triples = pers_triples;
    plan.mode = parse_sampling_mode(pers_mode);
    plan.seed = pers_seed;
    plan.tolerances = pers_tol.get();
    const auto source = load(pers_in);
    const std::size_t threads = pers_threads ? pers_threads : default_thread_count();
    AnalysisReport report{estimate_pers(source, plan, threads), std::nullopt};
    if (pers_meta) report.metadata = RunMetadata{threads, pers_in.path, pers_in.format};
    emit(write_report(report, pers_format == "csv" ? ReportFormat::Csv : ReportFormat::Json), pers_out,
         out);
    return kExitOk;
  }

  if (triple->parsed()) {
    const auto ids = split_list(triple_ids);
    if (ids.size() != 3) throw Error(ErrorKind::Usage, "--ids needs exactly three observable names");
    const std::array<std::string, 3> t{ids[0], ids[1], ids[2]};
    out << triple_json(t, feasibility_from_dataset(load(triple_in), t, triple_tol.get()));
    return kExitOk;
  }

  if (lp->parsed()) {
    auto problem = io::read_lp_problem(lp_path);
    if (lp_tol) problem.tolerance = *lp_tol;
    const auto result = decide_feasibility(problem);
    nlohmann::ordered_json j;
    j["feasible"] = result.feasible;
    j["max_violation"] = io::round12(result.max_violation);
    j["raw_residual"] = io::round12(result.raw_residual);
    if (result.witness) {
      std::vector<double> w;
      for (double v : *result.witness) w.push_back(io::round12(v));
      j["witness"] = w;
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  if (gh->parsed()) {
    const auto h = io::read_hypergraph(gh_path);
    print_validation(h, validate(h), out);
    const auto probe = probe_state(h);
    if (probe.state) {
      out << state_line(h, *probe.state) << "\n";
      out << "state unique: " << (probe.unique_up_to_tolerance ? "yes" : "no") << "\n";
    }
    std::string count;
    if (h.atoms.size() > kMaxEnumerationAtoms) {
      count = "skipped (more than 64 atoms)";
    } else {
      const auto states = enumerate_two_valued_states(h, gh_limit);
      count = std::to_string(states.size());
      if (states.size() >= gh_limit && gh_limit > 0) count += " (limit reached)";
    }
    out << "states: " << (probe.state ? "exists" : "none") << "; two-valued states: " << count << "\n";
    return kExitOk;
  }

  if (gen_c->parsed()) {
    ClassicalModelSpec spec{gc_t, std::nullopt, gc_n, gc_seed};
    if (!gc_table.empty()) {
      try {
        spec.table = nlohmann::json::parse(io::read_file(gc_table)).get<std::vector<double>>();
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
      }
    }
    const auto sample = gen_classical(spec);
    fs::create_directories(gc_out);
    io::write_file(fs::path(gc_out) / "records", io::format_joint(sample.data));
    io::write_file(fs::path(gc_out) / "exact.json", io::format_exact(sample.exact));
    return kExitOk;
  }

  if (gen_q->parsed()) {
    QubitModelSpec spec;
    for (const auto& a : split_list(gq_angles)) {
      try {
        spec.angles_deg.push_back(std::stod(a));
      } catch (const std::exception&) {
        throw Error(ErrorKind::Usage, "bad angle '" + a + "'");
      }
    }
    for (const auto& p : split_list(gq_pairs)) {
      const auto dash = p.find('-');
      try {
        if (dash == std::string::npos) throw std::invalid_argument(p);
        spec.pairs.emplace_back(std::stoul(p.substr(0, dash)), std::stoul(p.substr(dash + 1)));
      } catch (const std::exception&) {
        throw Error(ErrorKind::Usage, "bad pair '" + p + "'; expected i-j");
      }
    }
    spec.trials_per_pair = gq_n;
    spec.seed = gq_seed;
    const auto sample = gen_quantum(spec);
    fs::create_directories(gq_out);
    io::write_file(fs::path(gq_out) / "pairs", io::format_pairlog(sample.data));
    io::write_file(fs::path(gq_out) / "exact.json", io::format_exact(sample.exact, spec.angles_deg));
    return kExitOk;
  }
  return kExitUsage;
}

}  // namespace

int exit_status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return kExitUsage;
    case ErrorKind::SolverFailure: return kExitSolver;
    default: return kExitData;
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status_for(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitSolver;
  }
}

}  // namespace ctxstat
