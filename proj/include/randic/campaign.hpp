#ifndef RANDIC_CAMPAIGN_HPP
#define RANDIC_CAMPAIGN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "randic/bounds.hpp"
#include "randic/mixed_graph.hpp"

namespace randic {

enum class ReportFormat { Json, Csv };

/// Orders up to exhaustive_max are enumerated in full; larger orders draw
/// sample_limit graphs with seed + n. Without a sample limit every order is
/// enumerated.
struct CampaignConfig {
  int n_min = 2;
  int n_max = 4;
  bool connected_only = true;
  int min_degree = 1;
  int exhaustive_max = 4;
  std::optional<std::size_t> sample_limit = 500;
  std::uint64_t seed = 1;
  int threads = 1;
  ReportFormat format = ReportFormat::Json;
  std::string output;
  SuiteOptions suite;
};

/// Parses
///
///   campaign v1
///   n_range 2 4
///   connected_only true
///   min_degree 1
///   exhaustive_max 4
///   sample_limit 500      # or none
///   seed 42
///   threads 2
///   format csv
///   output report.csv
///
/// Every key is optional. Throws ParseError.
CampaignConfig parse_campaign_config(std::string_view text);

/// One graph x theorem row.
struct CampaignRecord {
  std::size_t graph = 0;
  int n = 0;
  std::string edges;  // e.g. "1--2 2->3"
  std::string theorem;
  CheckStatus status = CheckStatus::Pass;
  bool asserted = true;
  std::optional<double> lhs;
  std::optional<double> rhs;
  std::optional<double> slack;
  std::string reason;
};

struct CampaignSummary {
  std::size_t graphs = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t divergences = 0;
  std::size_t skips = 0;
  /// Keyed by theorem family, the id up to the first ':'.
  std::map<std::string, double> max_abs_slack;
};

struct CampaignResult {
  std::vector<CampaignRecord> records;
  CampaignSummary summary;
};

/// The graphs a campaign visits, in report order.
std::vector<MixedGraph> campaign_population(const CampaignConfig& config);

/// Runs the theorem suite over the population with config.threads workers.
/// Records come out in population order whatever the thread count.
CampaignResult run_campaign(const CampaignConfig& config);

std::string edge_list(const MixedGraph& g);
std::string campaign_json(const CampaignResult& result);
std::string campaign_csv(const CampaignResult& result);
std::string summary_text(const CampaignSummary& summary);

}  // namespace randic

#endif  // RANDIC_CAMPAIGN_HPP
