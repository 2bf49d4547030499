#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "robustfl/report.hpp"

using namespace robustfl;

TEST_CASE("static-lp and exact-int on the single pair") {
  const Instance inst = th::line_instance(Variant::Urfl, 1, {1.0}, {0.0}, {1.0});
  const auto s = run_method(inst, Method::StaticLp);
  REQUIRE(!s.methods.empty());
  CHECK(s.methods[0].total == doctest::Approx(2.0));
  CHECK(s.all_passed());

  const auto e = run_method(inst, Method::ExactInt);
  CHECK(e.methods[0].total == doctest::Approx(2.0));
  REQUIRE(!e.ratios.empty());
  CHECK(e.ratios[0].numerator == "static-lp");
  CHECK(e.ratios[0].denominator == "exact-int");
  CHECK(e.ratios[0].value == doctest::Approx(1.0));
}

TEST_CASE("method names round trip and mismatches are rejected") {
  for (const auto& name : method_names()) CHECK(to_string(parse_method(name)) == name);
  CHECK_THROWS_AS(parse_method("nope"), std::invalid_argument);
  const Instance inst = th::line_instance(Variant::Urfl, 1, {1.0}, {0.0}, {1.0});
  CHECK_THROWS_AS(run_method(inst, Method::RoundScrfl), std::invalid_argument);
  CHECK_THROWS_AS(run_method(inst, Method::Procedure1), std::invalid_argument);
}

TEST_CASE("reports are deterministic without timing") {
  GeneratorParams p;
  p.seed = 3;
  p.variant = Variant::Scrfl;
  const Instance inst = generate_euclidean(p);
  for (Method m : {Method::StaticLp, Method::Round, Method::Procedure1}) {
    CHECK(report_to_json(run_method(inst, m)) == report_to_json(run_method(inst, m)));
  }
  CHECK(report_to_json(run_method(inst, Method::StaticLp)).find("wall_ms") == std::string::npos);
}

TEST_CASE("empty seed range gives a header-only CSV") {
  BenchParams b;
  b.first_seed = 5;
  b.last_seed = 4;
  const auto r = run_bench(b);
  std::istringstream in(r.csv);
  std::string first, second, third;
  std::getline(in, first);
  std::getline(in, second);
  CHECK(first == kBenchCsvVersion);
  CHECK(second.rfind("seed,", 0) == 0);
  CHECK(!std::getline(in, third));
  CHECK(r.violations == 0);
}

TEST_CASE("bench rows come in seed order with the static/exact ratio") {
  BenchParams b;
  b.first_seed = 1;
  b.last_seed = 3;
  b.n = 2;
  b.m = 4;
  b.k = 2;
  const auto r = run_bench(b);
  std::istringstream in(r.csv);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].rfind("1,urfl,2,4,2,static-lp,", 0) == 0);
  CHECK(rows[5].rfind("3,urfl,2,4,2,exact-lp,", 0) == 0);
  REQUIRE(r.summary.size() == 2);
  CHECK(r.summary[0].max_ratio == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.violations == 0);
}
