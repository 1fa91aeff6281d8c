#include "ctxstat/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "ctxstat/error.hpp"
#include "json.hpp"

namespace ctxstat::io {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
  std::size_t offset;  // column of text[0] minus 1
};

std::string_view trim(std::string_view s, std::size_t* leading = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  if (leading) *leading = b;
  return s.substr(b, e - b);
}

// Non-empty lines, trimmed.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++number;
    std::size_t lead = 0;
    const auto t = trim(raw, &lead);
    if (!t.empty()) out.push_back({t, number, lead});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<Field> split_fields(const Line& line, char sep) {
  std::vector<Field> out;
  std::size_t pos = 0;
  for (;;) {
    const auto end = line.text.find(sep, pos);
    const auto raw =
        line.text.substr(pos, end == std::string_view::npos ? line.text.size() - pos : end - pos);
    std::size_t lead = 0;
    const auto t = trim(raw, &lead);
    out.push_back({t, line.offset + pos + lead + 1});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<Field> split_words(const Line& line) {
  std::vector<Field> out;
  std::size_t pos = 0;
  const auto& s = line.text;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    const auto start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t') ++pos;
    if (pos > start) out.push_back({s.substr(start, pos - start), line.offset + start + 1});
  }
  return out;
}

std::uint8_t parse_bit(const Field& f, std::size_t line) {
  if (f.text == "0") return 0;
  if (f.text == "1") return 1;
  if (f.text.empty()) throw ParseError(ErrorKind::ParseError, line, f.column, "empty field");
  throw ParseError(ErrorKind::NonBinaryValue, line, f.column,
                   "value '" + std::string(f.text) + "' is not 0 or 1");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

template <typename Fn>
auto with_json_errors(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", round12(v));
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorKind::Io, "write to '" + path.string() + "' failed");
}

JointRecordDataset parse_joint(std::string_view text, const std::string& source) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(ErrorKind::ParseError, 1, 1, "missing header line");
  std::vector<std::string> ids;
  for (const auto& f : split_fields(lines[0], ',')) {
    if (f.text.empty()) {
      throw ParseError(ErrorKind::HeaderMismatch, lines[0].number, f.column, "empty observable name");
    }
    ids.emplace_back(f.text);
  }
  ObservableSet set;
  try {
    set = ObservableSet::from_ids(ids, source);
  } catch (const Error& e) {
    throw ParseError(ErrorKind::HeaderMismatch, lines[0].number, 1, e.what());
  }
  JointRecordDataset data(std::move(set));
  std::vector<std::uint8_t> record(ids.size());
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto fields = split_fields(lines[l], ',');
    if (fields.size() != ids.size()) {
      throw ParseError(ErrorKind::HeaderMismatch, lines[l].number, 1,
                       "expected " + std::to_string(ids.size()) + " fields, found " +
                           std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < fields.size(); ++i) record[i] = parse_bit(fields[i], lines[l].number);
    data.add_record(record);
  }
  return data;
}

JointRecordDataset read_joint(const std::filesystem::path& path) {
  return parse_joint(read_file(path), path.string());
}

std::string format_joint(const JointRecordDataset& data) {
  std::string out;
  const auto& obs = data.observables();
  for (std::size_t i = 0; i < obs.size(); ++i) {
    if (i) out += ',';
    out += obs[i].id;
  }
  out += '\n';
  for (std::size_t r = 0; r < data.num_records(); ++r) {
    const auto rec = data.record(r);
    for (std::size_t i = 0; i < rec.size(); ++i) {
      if (i) out += ',';
      out += static_cast<char>('0' + rec[i]);
    }
    out += '\n';
  }
  return out;
}

PairLogDataset parse_pairlog(std::string_view text, const std::string& source) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(ErrorKind::ParseError, 1, 1, "missing header line");
  static constexpr std::string_view kHeader[] = {"obs_a", "val_a", "obs_b", "val_b"};
  const auto header = split_fields(lines[0], ',');
  if (header.size() != 4) {
    throw ParseError(ErrorKind::HeaderMismatch, lines[0].number, 1,
                     "pair-log header must be obs_a,val_a,obs_b,val_b");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (header[i].text != kHeader[i]) {
      throw ParseError(ErrorKind::HeaderMismatch, lines[0].number, header[i].column,
                       "expected '" + std::string(kHeader[i]) + "'");
    }
  }

  std::vector<std::string> ids;
  std::map<std::string, std::uint32_t, std::less<>> index;
  struct Raw {
    std::uint32_t a, b;
    std::uint8_t va, vb;
  };
  std::vector<Raw> raw;
  auto intern = [&](const Field& f, std::size_t line) {
    if (f.text.empty()) throw ParseError(ErrorKind::ParseError, line, f.column, "empty observable name");
    auto it = index.find(f.text);
    if (it != index.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(ids.size());
    ids.emplace_back(f.text);
    index.emplace(std::string(f.text), id);
    return id;
  };
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto n = lines[l].number;
    const auto fields = split_fields(lines[l], ',');
    if (fields.size() != 4) {
      throw ParseError(ErrorKind::HeaderMismatch, n, 1,
                       "expected 4 fields, found " + std::to_string(fields.size()));
    }
    Raw r{intern(fields[0], n), intern(fields[2], n), parse_bit(fields[1], n), parse_bit(fields[3], n)};
    if (r.a == r.b) throw ParseError(ErrorKind::ParseError, n, fields[2].column, "observable paired with itself");
    raw.push_back(r);
  }
  PairLogDataset data(ObservableSet::from_ids(ids, source));
  for (const auto& r : raw) data.add_entry({r.a, r.va, r.b, r.vb});
  return data;
}

PairLogDataset read_pairlog(const std::filesystem::path& path) {
  return parse_pairlog(read_file(path), path.string());
}

std::string format_pairlog(const PairLogDataset& data) {
  std::string out = "obs_a,val_a,obs_b,val_b\n";
  const auto& obs = data.observables();
  for (const auto& e : data.entries()) {
    out += obs[e.obs_a].id;
    out += ',';
    out += static_cast<char>('0' + e.value_a);
    out += ',';
    out += obs[e.obs_b].id;
    out += ',';
    out += static_cast<char>('0' + e.value_b);
    out += '\n';
  }
  return out;
}

DataSource parse_exact(std::string_view text, const std::string& source) {
  const auto j = parse_json(text);
  return with_json_errors([&]() -> DataSource {
    const auto kind = j.at("kind").get<std::string>();
    auto set = ObservableSet::from_ids(j.at("observables").get<std::vector<std::string>>(), source);
    if (kind == "classical") {
      ExactJointModel model{std::move(set), j.at("table").get<std::vector<double>>()};
      if (model.table.size() != (std::size_t{1} << model.observables.size())) {
        throw Error(ErrorKind::InvalidInput, "classical table must have 2^T entries");
      }
      return model;
    }
    if (kind == "quantum") {
      ExactPairModel model{std::move(set), {}};
      for (const auto& p : j.at("pairs")) {
        const auto a = model.observables.index_of(p.at("a").get<std::string>());
        const auto b = model.observables.index_of(p.at("b").get<std::string>());
        model.same_outcome[{std::min(a, b), std::max(a, b)}] = p.at("same_outcome").get<double>();
      }
      return model;
    }
    throw Error(ErrorKind::ParseError, "unknown exact model kind '" + kind + "'");
  });
}

DataSource read_exact(const std::filesystem::path& path) {
  return parse_exact(read_file(path), path.string());
}

std::string format_exact(const ExactJointModel& model) {
  ordered_json j;
  j["kind"] = "classical";
  j["observables"] = model.observables.ids();
  j["table"] = model.table;
  return dump(j);
}

std::string format_exact(const ExactPairModel& model, const std::vector<double>& angles_deg) {
  ordered_json j;
  j["kind"] = "quantum";
  j["observables"] = model.observables.ids();
  j["angles_deg"] = angles_deg;
  ordered_json pairs = ordered_json::array();
  for (const auto& [key, same] : model.same_outcome) {
    pairs.push_back({{"a", model.observables[key.first].id},
                     {"b", model.observables[key.second].id},
                     {"same_outcome", same}});
  }
  j["pairs"] = std::move(pairs);
  return dump(j);
}

ContextHypergraph parse_hypergraph(std::string_view text) {
  ContextHypergraph h;
  std::map<std::string, std::size_t, std::less<>> index;
  for (const auto& line : split_lines(text)) {
    Line content = line;
    const auto hash = content.text.find('#');
    if (hash != std::string_view::npos) content.text = trim(content.text.substr(0, hash));
    const auto words = split_words(content);
    if (words.empty()) continue;
    const auto keyword = words[0].text;
    if (keyword == "atom") {
      for (std::size_t i = 1; i < words.size(); ++i) {
        const std::string name(words[i].text);
        if (!index.emplace(name, h.atoms.size()).second) {
          throw ParseError(ErrorKind::ParseError, line.number, words[i].column,
                           "atom '" + name + "' declared twice");
        }
        h.atoms.push_back(name);
      }
    } else if (keyword == "context") {
      std::vector<std::size_t> ctx;
      for (std::size_t i = 1; i < words.size(); ++i) {
        const auto it = index.find(words[i].text);
        if (it == index.end()) {
          throw ParseError(ErrorKind::ParseError, line.number, words[i].column,
                           "undeclared atom '" + std::string(words[i].text) + "'");
        }
        ctx.push_back(it->second);
      }
      h.contexts.push_back(std::move(ctx));
    } else {
      throw ParseError(ErrorKind::ParseError, line.number, words[0].column,
                       "expected 'atom' or 'context', found '" + std::string(keyword) + "'");
    }
  }
  return h;
}

ContextHypergraph read_hypergraph(const std::filesystem::path& path) {
  return parse_hypergraph(read_file(path));
}

std::string format_hypergraph(const ContextHypergraph& h) {
  std::string out = "atom";
  for (const auto& a : h.atoms) out += " " + a;
  out += '\n';
  for (const auto& ctx : h.contexts) {
    out += "context";
    for (auto a : ctx) out += " " + h.atoms.at(a);
    out += '\n';
  }
  return out;
}

JointFeasibilityProblem parse_lp_problem(std::string_view text) {
  const auto j = parse_json(text);
  auto problem = with_json_errors([&] {
    JointFeasibilityProblem p;
    const auto set = ObservableSet::from_ids(j.at("observables").get<std::vector<std::string>>());
    p.num_observables = set.size();
    p.num_outcomes = j.value("outcomes", std::size_t{2});
    p.tolerance = j.value("tolerance", kDefaultTolLp);
    for (const auto& pair : j.at("pairs")) {
      const auto a = set.index_of(pair.at("a").get<std::string>());
      const auto b = set.index_of(pair.at("b").get<std::string>());
      const auto rows = pair.at("table").get<std::vector<std::vector<double>>>();
      PairMarginal table{p.num_outcomes, {}};
      if (rows.size() != p.num_outcomes) throw Error(ErrorKind::InvalidInput, "table has the wrong number of rows");
      for (const auto& row : rows) {
        if (row.size() != p.num_outcomes) throw Error(ErrorKind::InvalidInput, "table row has the wrong length");
        table.values.insert(table.values.end(), row.begin(), row.end());
      }
      if (!p.pair_marginals.emplace(std::pair{a, b}, std::move(table)).second) {
        throw Error(ErrorKind::InvalidInput, "pair listed twice");
      }
    }
    return p;
  });
  validate_problem(problem);
  return problem;
}

JointFeasibilityProblem read_lp_problem(const std::filesystem::path& path) {
  return parse_lp_problem(read_file(path));
}

}  // namespace ctxstat::io
