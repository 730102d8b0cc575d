#include "randic/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <sstream>
#include <thread>

#include "randic/enumeration.hpp"
#include "randic/report.hpp"

namespace randic {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

template <class Int>
Int parse_int(const std::string& tok, int line) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  return value;
}

bool parse_bool(const std::string& tok, int line) {
  if (tok == "true" || tok == "1") return true;
  if (tok == "false" || tok == "0") return false;
  throw ParseError(line, "expected true or false, got '" + tok + "'");
}

}  // namespace

CampaignConfig parse_campaign_config(std::string_view text) {
  CampaignConfig c;
  int line_no = 0;
  bool header = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "campaign" || tok[1] != "v1") {
        throw ParseError(line_no, "expected header 'campaign v1'");
      }
      header = true;
      continue;
    }
    const std::string& key = tok[0];
    auto arity = [&](std::size_t k) {
      if (tok.size() != k + 1) {
        throw ParseError(line_no, key + " takes " + std::to_string(k) + " value(s)");
      }
    };
    if (key == "n_range") {
      arity(2);
      c.n_min = parse_int<int>(tok[1], line_no);
      c.n_max = parse_int<int>(tok[2], line_no);
    } else if (key == "connected_only") {
      arity(1);
      c.connected_only = parse_bool(tok[1], line_no);
    } else if (key == "min_degree") {
      arity(1);
      c.min_degree = parse_int<int>(tok[1], line_no);
    } else if (key == "exhaustive_max") {
      arity(1);
      c.exhaustive_max = parse_int<int>(tok[1], line_no);
    } else if (key == "sample_limit") {
      arity(1);
      if (tok[1] == "none") {
        c.sample_limit.reset();
      } else {
        c.sample_limit = parse_int<std::size_t>(tok[1], line_no);
      }
    } else if (key == "seed") {
      arity(1);
      c.seed = parse_int<std::uint64_t>(tok[1], line_no);
    } else if (key == "threads") {
      arity(1);
      c.threads = parse_int<int>(tok[1], line_no);
    } else if (key == "format") {
      arity(1);
      if (tok[1] == "json") {
        c.format = ReportFormat::Json;
      } else if (tok[1] == "csv") {
        c.format = ReportFormat::Csv;
      } else {
        throw ParseError(line_no, "format must be json or csv");
      }
    } else if (key == "output") {
      arity(1);
      c.output = tok[1];
    } else if (key == "combinatorial_cap") {
      arity(1);
      c.suite.combinatorial_cap = parse_int<int>(tok[1], line_no);
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  if (!header) throw ParseError(1, "expected header 'campaign v1'");
  if (c.n_min < 1 || c.n_max < c.n_min) {
    throw ParseError(line_no, "n_range must satisfy 1 <= min <= max");
  }
  if (c.threads < 1) throw ParseError(line_no, "threads must be at least 1");
  return c;
}

std::vector<MixedGraph> campaign_population(const CampaignConfig& config) {
  EnumerationOptions opts;
  opts.connected_only = config.connected_only;
  opts.min_degree = config.min_degree;
  std::vector<MixedGraph> out;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    if (n <= config.exhaustive_max || !config.sample_limit) {
      for_each_mixed_graph(n, opts, [&](const MixedGraph& g) { out.push_back(g); });
    } else {
      auto sample = sample_mixed_graphs(n, *config.sample_limit, config.seed + n, opts);
      std::move(sample.begin(), sample.end(), std::back_inserter(out));
    }
  }
  return out;
}

std::string edge_list(const MixedGraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.from) + (e.kind == EdgeKind::Arc ? "->" : "--") + std::to_string(e.to);
  }
  return out;
}

namespace {

std::vector<CampaignRecord> check_graph(std::size_t index, const MixedGraph& g,
                                        const SuiteOptions& opts) {
  std::vector<CampaignRecord> out;
  CampaignRecord base;
  base.graph = index;
  base.n = g.order();
  base.edges = edge_list(g);
  try {
    const TheoremSuite suite = run_theorem_suite(g, opts);
    for (const TheoremRecord& r : suite.records) {
      CampaignRecord rec = base;
      rec.theorem = r.id;
      rec.status = r.status;
      rec.asserted = r.asserted;
      rec.lhs = r.lhs;
      rec.rhs = r.rhs;
      rec.slack = r.slack;
      rec.reason = r.reason;
      out.push_back(std::move(rec));
    }
  } catch (const PreconditionError& e) {
    base.theorem = "suite";
    base.status = CheckStatus::Skip;
    base.reason = e.what();
    out.push_back(std::move(base));
  }
  return out;
}

std::string family(const std::string& id) { return id.substr(0, id.find(':')); }

}  // namespace

CampaignResult run_campaign(const CampaignConfig& config) {
  const std::vector<MixedGraph> population = campaign_population(config);
  std::vector<std::vector<CampaignRecord>> per_graph(population.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < population.size();) {
      per_graph[i] = check_graph(i, population[i], config.suite);
    }
  };
  const int workers = std::max(1, config.threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  CampaignResult result;
  result.summary.graphs = population.size();
  for (auto& records : per_graph) {
    for (auto& r : records) {
      ++result.summary.checks;
      if (r.status == CheckStatus::Skip) ++result.summary.skips;
      if (r.status == CheckStatus::Fail) {
        ++(r.asserted ? result.summary.failures : result.summary.divergences);
      }
      if (r.slack && std::isfinite(*r.slack)) {
        double& worst = result.summary.max_abs_slack[family(r.theorem)];
        worst = std::max(worst, std::abs(*r.slack));
      }
      result.records.push_back(std::move(r));
    }
  }
  return result;
}

namespace {

std::string optional_json(const std::optional<double>& x) { return x ? json_number(*x) : "null"; }
std::string optional_csv(const std::optional<double>& x) {
  return x && std::isfinite(*x) ? format_number(*x) : "";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string campaign_json(const CampaignResult& result) {
  std::ostringstream out;
  out << "{\"records\": [";
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const CampaignRecord& r = result.records[i];
    out << (i ? ",\n  " : "\n  ") << "{\"graph\": " << r.graph << ", \"n\": " << r.n
        << ", \"edges\": " << json_string(r.edges) << ", \"theorem\": " << json_string(r.theorem)
        << ", \"status\": " << json_string(to_string(r.status))
        << ", \"asserted\": " << (r.asserted ? "true" : "false")
        << ", \"lhs\": " << optional_json(r.lhs) << ", \"rhs\": " << optional_json(r.rhs)
        << ", \"slack\": " << optional_json(r.slack) << ", \"reason\": " << json_string(r.reason)
        << '}';
  }
  const CampaignSummary& s = result.summary;
  out << "\n],\n\"summary\": {\"graphs\": " << s.graphs << ", \"checks\": " << s.checks
      << ", \"failures\": " << s.failures << ", \"divergences\": " << s.divergences
      << ", \"skips\": " << s.skips << ", \"max_abs_slack\": {";
  bool first = true;
  for (const auto& [name, value] : s.max_abs_slack) {
    out << (first ? "" : ", ") << json_string(name) << ": " << json_number(value);
    first = false;
  }
  out << "}}}\n";
  return out.str();
}

std::string campaign_csv(const CampaignResult& result) {
  std::ostringstream out;
  out << "graph,n,edges,theorem,status,asserted,lhs,rhs,slack,reason\n";
  for (const CampaignRecord& r : result.records) {
    out << r.graph << ',' << r.n << ',' << csv_field(r.edges) << ',' << csv_field(r.theorem) << ','
        << to_string(r.status) << ',' << (r.asserted ? "true" : "false") << ','
        << optional_csv(r.lhs) << ',' << optional_csv(r.rhs) << ',' << optional_csv(r.slack) << ','
        << csv_field(r.reason) << '\n';
  }
  return out.str();
}

std::string summary_text(const CampaignSummary& s) {
  std::ostringstream out;
  out << "graphs: " << s.graphs << "\nchecks: " << s.checks << "\nfailures: " << s.failures
      << "\ndivergences: " << s.divergences << "\nskips: " << s.skips << '\n';
  for (const auto& [name, value] : s.max_abs_slack) {
    out << "max |slack| " << name << ": " << format_number(value) << '\n';
  }
  return out.str();
}

}  // namespace randic
