#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "randic/campaign.hpp"
#include "randic/report.hpp"

using namespace randic;
using nlohmann::json;

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-2) == "-2");
  CHECK(json_number(INFINITY) == "null");
  CHECK(json_number(NAN) == "null");
  CHECK(json_string("a\"b\\c\n") == "\"a\\\"b\\\\c\\n\"");
}

TEST_CASE("suite JSON is keyed by record id") {
  const TheoremSuite suite = run_theorem_suite(oracle::directed_cycle(3));
  const json j = json::parse(suite_json(suite));
  CHECK(j.size() == suite.records.size());
  CHECK(j["minus_one_positive_bipartite"]["asserted"] == false);
  CHECK(j["minus_one_positive_bipartite"]["satisfied"] == false);
  CHECK(j["energy_lower_negative"]["lhs"].get<double>() == doctest::Approx(2.0));
  CHECK(j["bipartite_symmetric"]["lhs"].is_null());
  const std::string text = suite_text(suite);
  CHECK(text.find("divergence: minus_one_positive_bipartite") != std::string::npos);
}

TEST_CASE("bounds JSON") {
  const json j = json::parse(bounds_json(energy_bounds_report(oracle::path(3))));
  CHECK(j["n"] == 3);
  CHECK(j["bounds"].size() == 8);
  CHECK(j["bounds"]["energy_lower_negative"]["skipped"] == true);
  CHECK(j["bounds"]["energy_lower_negative"]["lhs"].is_null());
}

TEST_CASE("campaign config parsing") {
  const CampaignConfig c = parse_campaign_config(
      "campaign v1\r\n# comment\nn_range 3 5\nconnected_only false\nmin_degree 2\n"
      "exhaustive_max 3\nsample_limit none\nseed 9\nthreads 3\nformat csv\noutput out.csv\n");
  CHECK(c.n_min == 3);
  CHECK(c.n_max == 5);
  CHECK_FALSE(c.connected_only);
  CHECK(c.min_degree == 2);
  CHECK(c.exhaustive_max == 3);
  CHECK_FALSE(c.sample_limit.has_value());
  CHECK(c.seed == 9);
  CHECK(c.threads == 3);
  CHECK(c.format == ReportFormat::Csv);
  CHECK(c.output == "out.csv");
  CHECK_THROWS_AS(parse_campaign_config("n_range 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_campaign_config("campaign v1\nbogus 1\n"), ParseError);
  CHECK_THROWS_AS(parse_campaign_config("campaign v1\nn_range 4 2\n"), ParseError);
  CHECK_THROWS_AS(parse_campaign_config("campaign v1\nseed x\n"), ParseError);
}

TEST_CASE("campaign over the single edge") {
  CampaignConfig c;
  c.n_min = c.n_max = 2;
  const CampaignResult r = run_campaign(c);
  CHECK(r.summary.graphs == 3);
  CHECK(r.summary.failures == 0);
  CHECK(r.records.front().edges == "1--2");
  CHECK(r.records.back().edges == "2->1");
}

TEST_CASE("exhaustive n = 3 campaign has no assertion failures") {
  CampaignConfig c;
  c.n_min = c.n_max = 3;
  const CampaignResult r = run_campaign(c);
  CHECK(r.summary.graphs == 54);
  CHECK(r.summary.failures == 0);
  // Two directed triangles: one divergence each.
  CHECK(r.summary.divergences == 2);
}

TEST_CASE("campaign output is independent of the thread count") {
  CampaignConfig c;
  c.n_min = 2;
  c.n_max = 5;
  c.sample_limit = 40;
  c.seed = 17;
  const CampaignResult one = run_campaign(c);
  c.threads = 4;
  const CampaignResult four = run_campaign(c);
  CHECK(campaign_json(one) == campaign_json(four));
  CHECK(campaign_csv(one) == campaign_csv(four));
}

TEST_CASE("CSV and JSON carry the same records") {
  CampaignConfig c;
  c.n_min = 3;
  c.n_max = 4;
  c.exhaustive_max = 3;
  c.sample_limit = 30;
  const CampaignResult r = run_campaign(c);
  const json j = json::parse(campaign_json(r));
  const auto& records = j["records"];
  std::istringstream csv(campaign_csv(r));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "graph,n,edges,theorem,status,asserted,lhs,rhs,slack,reason");
  std::size_t i = 0;
  auto field = [](const json& v) { return v.is_null() ? std::string() : format_number(v.get<double>()); };
  for (; std::getline(csv, line); ++i) {
    REQUIRE(i < records.size());
    const json& rec = records[i];
    const std::string expected = std::to_string(rec["graph"].get<int>()) + "," +
                                 std::to_string(rec["n"].get<int>()) + "," + rec["edges"].get<std::string>() +
                                 "," + rec["theorem"].get<std::string>() + "," +
                                 rec["status"].get<std::string>() + "," +
                                 (rec["asserted"].get<bool>() ? "true" : "false") + "," + field(rec["lhs"]) +
                                 "," + field(rec["rhs"]) + "," + field(rec["slack"]) + "," +
                                 rec["reason"].get<std::string>();
    CHECK(line == expected);
  }
  CHECK(i == records.size());
  CHECK(j["summary"]["checks"] == records.size());
}

TEST_CASE("disconnected graphs get a single skip record") {
  CampaignConfig c;
  c.n_min = c.n_max = 3;
  c.connected_only = false;
  c.min_degree = 0;
  const CampaignResult r = run_campaign(c);
  CHECK(r.summary.graphs == 64);
  std::size_t suite_skips = 0;
  for (const auto& rec : r.records) suite_skips += rec.theorem == "suite";
  CHECK(suite_skips == 10);
}
