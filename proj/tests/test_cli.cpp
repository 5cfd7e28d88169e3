#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "helpers.hpp"
#include "igusa/cli.hpp"
#include "igusa/render.hpp"
#include "igusa/resolution.hpp"
#include "igusa/verify.hpp"
#include "igusa/zeta_closed.hpp"

using namespace igusa;
using igusa::test::q;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "igusa");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute closed renders the cusp formula") {
  const Run r = run({"compute", "--n", "3", "--m", "2", "--p", "5", "--method", "closed"});
  CHECK(r.code == 0);
  CHECK(r.out == "Z(t) = " + rational_function_text(resolution_zeta(5)) + "\n");
}

TEST_CASE("compute exit codes") {
  CHECK(run({"compute", "--n", "2", "--m", "2", "--p", "2", "--method", "spf"}).code == kExitUnsupportedPrime);
  CHECK(run({"compute", "--n", "2", "--m", "2", "--p", "2"}).code == kExitUnsupportedPrime);
  CHECK(run({"compute", "--n", "2", "--m", "2", "--p", "4"}).code == kExitUsage);
  CHECK(run({"compute", "--n", "0", "--m", "2", "--p", "5"}).code == kExitUsage);
  CHECK(run({"compute", "--n", "2", "--m", "2"}).code == kExitUsage);
  CHECK(run({"compute", "--n", "2", "--m", "2", "--p", "5", "--method", "bogus"}).code == kExitUsage);
  CHECK(run({"compute", "--n", "2", "--m", "2", "--p", "5", "--method", "series"}).code == kExitUsage);
  CHECK(run({"compute", "--n", "2", "--m", "2", "--p", "5", "--method", "resolution"}).code == kExitUsage);
  CHECK(run({"compute", "--n", "2", "--m", "3", "--p", "5", "--method", "resolution"}).code == kExitOk);
  CHECK(run({"compute", "--n", "2", "--m", "2", "--p", "5", "--method", "series", "--terms", "20"}).code ==
        kExitBudget);
  const Run bad = run({"frobnicate"});
  CHECK(bad.code == kExitUsage);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("compute series matches the closed form expansion") {
  const Run r = run({"compute", "--n", "2", "--m", "2", "--p", "5", "--method", "series", "--terms", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("series: 16/25, 32/125, 48/625, 64/3125") != std::string::npos);

  const Run closed = run({"compute", "--n", "2", "--m", "2", "--p", "5", "--terms", "4"});
  CHECK(closed.out.find("series: 16/25, 32/125, 48/625, 64/3125") != std::string::npos);
}

TEST_CASE("compute json output") {
  const Run r = run({"compute", "--n", "3", "--m", "2", "--p", "5", "--method", "spf", "--format", "json",
                     "--terms", "3", "--trace"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["n"] == 3);
  CHECK(doc["m"] == 2);
  CHECK(doc["p"] == 5);
  CHECK(doc["method"] == "spf");
  CHECK(doc["applications"] == 4);
  CHECK(doc["trace"].size() == 4);
  CHECK_FALSE(doc.contains("paper_condition"));
  CHECK(rational_function_from_json(doc) == zeta_closed_form(ZetaParams(3, 2, 5)));
  CHECK(doc["series"].size() == 3);
  for (const auto& c : doc["numerator"]) CHECK(c.get<std::string>().find('/') != std::string::npos);

  const Run flagged = run({"compute", "--n", "5", "--m", "3", "--p", "5", "--format", "json"});
  CHECK(nlohmann::json::parse(flagged.out)["paper_condition"] == "one_exponent_divisible");
}

TEST_CASE("text and json carry the same exact values") {
  const Run text = run({"compute", "--n", "4", "--m", "6", "--p", "5", "--terms", "5"});
  const Run json = run({"compute", "--n", "4", "--m", "6", "--p", "5", "--terms", "5", "--format", "json"});
  REQUIRE(text.code == 0);
  REQUIRE(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  const RationalFunction from_json = rational_function_from_json(doc);
  CHECK(text.out.find("Z(t) = " + rational_function_text(from_json) + "\n") == 0);
  std::vector<BigRational> series;
  for (const auto& c : doc["series"]) series.push_back(parse_rational(c.get<std::string>()));
  CHECK(text.out.find("series: " + series_text(series)) != std::string::npos);
}

TEST_CASE("count subcommand") {
  const Run r = run({"count", "--n", "3", "--m", "2", "--p", "7", "--e", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("N(0) theorem = 7") != std::string::npos);
  CHECK(r.out.find("N(0) brute force = 7") != std::string::npos);
  CHECK(r.out.find("N(0) agree = yes") != std::string::npos);

  const Run nine = run({"count", "--n", "1", "--m", "1", "--p", "3", "--e", "2"});
  CHECK(nine.out.find("N_2 = 9\n") == 0);
  CHECK(nine.out.find("= 1/9") != std::string::npos);

  CHECK(run({"count", "--n", "2", "--m", "2", "--p", "5", "--e", "9"}).code == kExitBudget);

  const Run json = run({"count", "--n", "2", "--m", "2", "--p", "5", "--e", "1", "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["count"] == 9);
  CHECK(doc["agree"] == true);
}

TEST_CASE("IGUSA_BUDGET overrides the enumeration budget") {
  CHECK(parse_budget("100") == 100u);
  CHECK_FALSE(parse_budget("0").has_value());
  CHECK_FALSE(parse_budget("-3").has_value());
  CHECK_FALSE(parse_budget("12x").has_value());

  ::setenv("IGUSA_BUDGET", "100", 1);
  CHECK(run({"count", "--n", "2", "--m", "2", "--p", "5", "--e", "2"}).code == kExitBudget);
  ::setenv("IGUSA_BUDGET", "nope", 1);
  CHECK(run({"count", "--n", "2", "--m", "2", "--p", "5", "--e", "1"}).code == kExitUsage);
  ::unsetenv("IGUSA_BUDGET");
  CHECK(run({"count", "--n", "2", "--m", "2", "--p", "5", "--e", "2"}).code == kExitOk);
}

TEST_CASE("verify subcommand") {
  const Run all = run({"verify", "--n-max", "4", "--m-max", "4", "--primes", "2,3,5", "--terms", "4"});
  CHECK(all.code == 0);
  CHECK(all.out.find("failed 0") != std::string::npos);
  CHECK(all.out.find("SKIP") != std::string::npos);

  const Run line = run({"verify", "--n-max", "1", "--m-max", "1", "--primes", "3", "--terms", "3"});
  CHECK(line.code == 0);
  CHECK(line.out.find("passed 1, failed 0, skipped 0") != std::string::npos);

  CHECK(run({"verify", "--primes", "4"}).code == kExitUsage);
}

TEST_CASE("verify reports an injected n0 error") {
  VerifyOptions options;
  options.n_max = 3;
  options.m_max = 3;
  options.primes = {5, 3};
  options.terms = 3;
  options.n0_source = [](const ZetaParams& params) { return n0_theorem(params) + 1; };
  const VerifyReport report = run_verification(options);
  CHECK_FALSE(report.passed());
  const InstanceReport* bad = report.first_failure();
  REQUIRE(bad != nullptr);
  CHECK(bad->params == ZetaParams(1, 1, 3));
  CHECK(bad->first_failure()->name == "n0");

  // ordering is by (n, m, p) regardless of the order primes were given in
  CHECK(report.instances[0].params == ZetaParams(1, 1, 3));
  CHECK(report.instances[1].params == ZetaParams(1, 1, 5));

  std::ostringstream out;
  print_report(report, out);
  CHECK(out.str().find("counterexample: n=1 m=1 p=3 check n0") != std::string::npos);
}
