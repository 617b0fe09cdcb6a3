#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "mapbij/corpus.hpp"
#include "mapbij/report.hpp"
#include "mapbij/tutte.hpp"
#include "mapbij/verify.hpp"
#include "support.hpp"

using namespace mapbij;

namespace
{

std::string render(VerificationReport const &r, OutputFormat f)
{
  std::ostringstream out;
  write_report(out, r, f);
  return out.str();
}

} // namespace

TEST_CASE("triangle passes every check")
{
  auto report = verify_all(NamedMap{"k3", k3_map()});
  REQUIRE(report.maps.size() == 1);
  auto const &m = report.maps[0];
  CHECK(m.tutte == "x^2 + x + y");
  REQUIRE(m.census.has_value());
  Table3<std::uint64_t> want{{{8, 4, 2}, {7, 3, 1}, {6, 2, 0}}};
  CHECK(*m.census == want);
  CHECK(report.passed());
  CHECK(report.count(CheckStatus::Fail) == 0);
  CHECK(report.count(CheckStatus::Pass) >= 14);
  CHECK(report.global_checks.empty());
}

TEST_CASE("six-edge example map passes and has an x^2 tree")
{
  auto report = verify_all(NamedMap{"six_edge", six_edge_map()});
  CHECK(report.passed());
  CHECK(tutte_polynomial(six_edge_map()).coefficient(2, 0) >= 1);
}

TEST_CASE("maps above the cap are skipped")
{
  VerifyOptions o;
  o.max_half_edges = 4;
  auto report = verify_all(NamedMap{"k3", k3_map()}, o);
  REQUIRE(report.maps[0].checks.size() == 1);
  CHECK(report.maps[0].checks[0].status == CheckStatus::Skip);
  CHECK(report.passed());
}

TEST_CASE("corpus verification covers every operation")
{
  auto corpus = build_corpus({});
  auto report = verify_all(corpus, {});
  CHECK(report.passed());
  REQUIRE(report.global_checks.size() == 1);
  CHECK(report.global_checks[0].check == "coverage");
  CHECK(report.global_checks[0].status == CheckStatus::Pass);
  for (auto const &op : operation_names())
    CHECK(report.coverage.count(op) == 1);
  std::set<std::string> names;
  for (auto const &m : report.maps)
    names.insert(m.name);
  CHECK(names.size() == corpus.size());
}

TEST_CASE("reports are deterministic across thread counts")
{
  CorpusOptions co;
  co.random_count = 10;
  auto corpus = build_corpus(co);
  VerifyOptions one;
  one.threads = 1;
  VerifyOptions many;
  many.threads = 4;
  auto a = verify_all(corpus, one);
  auto b = verify_all(corpus, many);
  for (auto f : {OutputFormat::Human, OutputFormat::Tsv, OutputFormat::JsonLines})
    CHECK(render(a, f) == render(b, f));
}

TEST_CASE("report formats")
{
  auto report = verify_all(NamedMap{"k3", k3_map()});
  std::string tsv = render(report, OutputFormat::Tsv);
  CHECK(tsv.rfind("map\tcheck\tstatus\twitness\n", 0) == 0);
  CHECK(tsv.find("k3\tround_trips\tpass\t") != std::string::npos);

  std::istringstream lines(render(report, OutputFormat::JsonLines));
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.size() == 4);
    CHECK(j["map"] == "k3");
    CHECK(j.contains("check"));
    CHECK(j.contains("witness"));
    CHECK(j["status"] == "pass");
    ++n;
  }
  CHECK(n == static_cast<int>(report.maps[0].checks.size()));

  CHECK(render(report, OutputFormat::Human).find("pass") != std::string::npos);
}

TEST_CASE("census output")
{
  Census c = specialization_census(k3_map());
  std::ostringstream tsv;
  write_census(tsv, "k3", c, OutputFormat::Tsv);
  CHECK(tsv.str().rfind("map\ttable\trow\tany\tconnected\texternal\n"
                        "k3\tsubgraphs\tany\t8\t4\t2\n"
                        "k3\tsubgraphs\tforest\t7\t3\t1\n"
                        "k3\tsubgraphs\tinternal\t6\t2\t0\n",
                        0) == 0);
  std::ostringstream human;
  write_census(human, "k3", c, OutputFormat::Human);
  CHECK(human.str().find("consistent") != std::string::npos);
}

TEST_CASE("failures carry a witness")
{
  // A check failure is a report entry, not an exception.
  CheckResult r{"m", "census", CheckStatus::Fail, "cell (0,0)"};
  VerificationReport report;
  MapReport mr;
  mr.name = "m";
  mr.checks.push_back(r);
  report.maps.push_back(mr);
  CHECK_FALSE(report.passed());
  CHECK(render(report, OutputFormat::Tsv).find("m\tcensus\tfail\tcell (0,0)") !=
        std::string::npos);
}
