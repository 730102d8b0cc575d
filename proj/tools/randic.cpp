// randic: spectra, characteristic polynomials, bounds and theorem campaigns
// for the Hermitian Randic matrix of mixed graphs.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "randic/bounds.hpp"
#include "randic/campaign.hpp"
#include "randic/hermitian.hpp"
#include "randic/report.hpp"
#include "randic/spectral.hpp"

namespace {

using namespace randic;

enum ExitCode { kOk = 0, kAssertionFailed = 1, kParseFailed = 2, kPrecondition = 3, kUnwritable = 4 };

struct UnwritableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::string output;
  bool dump = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const Globals& g, const std::string& payload) {
  if (g.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out || !(out << payload) || !out.flush()) throw UnwritableError("cannot write " + g.output);
}

std::string dump_prefix(const Globals& g, const MixedGraph& graph) {
  return g.dump && g.format == "text" ? dump_matrix(build_randic(graph)) : std::string();
}

std::string charpoly_lines(const std::vector<std::string>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    out += "a_" + std::to_string(k) + " = " + values[k] + "\n";
  }
  return out;
}

std::string json_array(const std::vector<std::string>& values, bool quoted) {
  std::string out = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    out += (k ? ", " : "") + (quoted ? json_string(values[k]) : values[k]);
  }
  return out + "]";
}

int cmd_charpoly(const Globals& g, const MixedGraph& graph, const std::string& method) {
  std::vector<std::string> exact_text;
  std::vector<std::string> numeric_text;
  std::optional<CharPoly<Rational>> exact;
  std::optional<CharPoly<double>> numeric;
  if (method != "numeric") {
    exact = char_poly_combinatorial(graph);
    for (const Rational& r : exact->coefficients) exact_text.push_back(to_fraction_string(r));
  }
  if (method != "combinatorial") {
    numeric = char_poly_numeric(build_randic(graph));
    for (double x : numeric->coefficients) numeric_text.push_back(format_number(x));
  }
  std::string out = dump_prefix(g, graph);
  if (g.format == "json") {
    out += "{";
    if (exact) out += "\"combinatorial\": " + json_array(exact_text, true);
    if (exact && numeric) out += ", ";
    if (numeric) {
      std::vector<std::string> json_values;
      for (double x : numeric->coefficients) json_values.push_back(json_number(x));
      out += "\"numeric\": " + json_array(json_values, false);
    }
    if (exact && numeric) {
      out += ", \"max_gap\": " + json_number(max_coefficient_gap(to_double(*exact), *numeric));
    }
    out += "}\n";
  } else if (method == "both") {
    out += "combinatorial:\n" + charpoly_lines(exact_text) + "numeric:\n" +
           charpoly_lines(numeric_text) +
           "max gap: " + format_number(max_coefficient_gap(to_double(*exact), *numeric)) + "\n";
  } else {
    out += charpoly_lines(exact ? exact_text : numeric_text);
  }
  emit(g, out);
  return kOk;
}

int cmd_interlace(const Globals& g, const MixedGraph& graph, const std::pair<int, int>& edge) {
  const InterlacingResult res = interlacing_check(graph, edge.first, edge.second);
  std::ostringstream out;
  out << dump_prefix(g, graph);
  auto list = [](const std::vector<double>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + json_number(v[i]);
    return s;
  };
  if (g.format == "json") {
    out << "{\"edge\": [" << edge.first << ", " << edge.second << "], \"lambda\": ["
        << list(res.lambda, ", ") << "], \"theta\": [" << list(res.theta, ", ") << "], \"holds\": [";
    for (std::size_t k = 0; k < res.holds.size(); ++k) out << (k ? ", " : "") << (res.holds[k] ? "true" : "false");
    out << "], \"all_hold\": " << (res.all_hold() ? "true" : "false") << "}\n";
  } else {
    out << "λ: " << list(res.lambda, " ") << "\nθ: " << list(res.theta, " ") << '\n';
    for (std::size_t k = 0; k < res.holds.size(); ++k) {
      out << "k=" << k + 1 << ": " << (res.holds[k] ? "holds" : "VIOLATED") << '\n';
    }
    out << (res.all_hold() ? "interlacing holds\n" : "interlacing violated\n");
  }
  emit(g, out.str());
  return kOk;
}

int cmd_enumerate(const Globals& g, CampaignConfig config) {
  if (g.format == "json") config.format = ReportFormat::Json;
  if (g.format == "csv") config.format = ReportFormat::Csv;
  if (!g.output.empty()) config.output = g.output;
  const CampaignResult result = run_campaign(config);
  const std::string report =
      config.format == ReportFormat::Csv ? campaign_csv(result) : campaign_json(result);
  if (config.output.empty()) {
    std::cout << report;
  } else {
    Globals target;
    target.output = config.output;
    emit(target, report);
    std::cout << summary_text(result.summary);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian Randic matrix toolkit for mixed graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--format", globals.format, "text, json, or csv (enumerate only)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", globals.output, "write the payload to this path");
  app.add_flag("--dump", globals.dump, "print the Randic matrix first (text format)");

  std::string file;
  auto add_graph_command = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", file, "mixedgraph v1 file, or - for stdin")->required();
    return cmd;
  };
  CLI::App* spectrum = add_graph_command("spectrum", "eigenvalues, energy, rho, sigma, k");
  CLI::App* charpoly = add_graph_command("charpoly", "characteristic polynomial coefficients");
  std::string method = "numeric";
  charpoly->add_option("--method", method)->check(CLI::IsMember({"numeric", "combinatorial", "both"}));
  CLI::App* energy_cmd = add_graph_command("energy", "graph energy");
  CLI::App* bounds = add_graph_command("bounds", "energy bounds report");
  CLI::App* interlace = add_graph_command("interlace", "edge-deletion interlacing");
  std::pair<int, int> edge;
  interlace->add_option("--edge", edge, "u,v")->required()->delimiter(',');
  CLI::App* check = add_graph_command("check", "run every theorem checker");

  CLI::App* enumerate = app.add_subcommand("enumerate", "theorem campaign over small mixed graphs");
  std::string config_path;
  CampaignConfig config;
  std::string sample_limit;
  enumerate->add_option("--config", config_path, "campaign v1 file");
  enumerate->add_option("--n-min", config.n_min);
  enumerate->add_option("--n-max", config.n_max);
  enumerate->add_option("--min-degree", config.min_degree);
  enumerate->add_option("--exhaustive-max", config.exhaustive_max);
  enumerate->add_option("--sample-limit", sample_limit, "graphs per sampled order, or none");
  enumerate->add_option("--seed", config.seed);
  enumerate->add_option("--threads", config.threads)->check(CLI::PositiveNumber);
  enumerate->add_flag("--connected-only,!--all-graphs", config.connected_only);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseFailed;
  }

  try {
    if (enumerate->parsed()) {
      if (!config_path.empty()) {
        CampaignConfig from_file = parse_campaign_config(read_input(config_path));
        auto given = [&](const char* name) { return enumerate->count(name) > 0; };
        if (given("--n-min")) from_file.n_min = config.n_min;
        if (given("--n-max")) from_file.n_max = config.n_max;
        if (given("--min-degree")) from_file.min_degree = config.min_degree;
        if (given("--exhaustive-max")) from_file.exhaustive_max = config.exhaustive_max;
        if (given("--seed")) from_file.seed = config.seed;
        if (given("--threads")) from_file.threads = config.threads;
        if (given("--connected-only") || given("--all-graphs")) {
          from_file.connected_only = config.connected_only;
        }
        config = std::move(from_file);
      }
      if (sample_limit == "none") {
        config.sample_limit.reset();
      } else if (!sample_limit.empty()) {
        config.sample_limit = std::stoull(sample_limit);
      }
      if (config.n_min < 1 || config.n_max < config.n_min) {
        throw PreconditionError("n range must satisfy 1 <= min <= max");
      }
      return cmd_enumerate(globals, config);
    }

    const MixedGraph graph = parse_graph(read_input(file));
    const bool json = globals.format == "json";
    if (spectrum->parsed()) {
      const Spectrum s = randic_spectrum(graph);
      emit(globals, dump_prefix(globals, graph) + (json ? spectrum_json(s) : spectrum_text(s)));
    } else if (charpoly->parsed()) {
      return cmd_charpoly(globals, graph, method);
    } else if (energy_cmd->parsed()) {
      const double e = energy(randic_spectrum(graph));
      emit(globals, dump_prefix(globals, graph) +
                        (json ? "{\"energy\": " + json_number(e) + "}\n" : "ε: " + format_number(e) + "\n"));
    } else if (bounds->parsed()) {
      const BoundsReport r = energy_bounds_report(graph);
      emit(globals, dump_prefix(globals, graph) + (json ? bounds_json(r) : bounds_text(r)));
    } else if (interlace->parsed()) {
      return cmd_interlace(globals, graph, edge);
    } else if (check->parsed()) {
      const TheoremSuite suite = run_theorem_suite(graph);
      emit(globals, dump_prefix(globals, graph) + (json ? suite_json(suite) : suite_text(suite)));
      return suite.failures() > 0 ? kAssertionFailed : kOk;
    }
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseFailed;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const UnwritableError& e) {
    std::cerr << "output: " << e.what() << '\n';
    return kUnwritable;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}
