#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "cubelab/approx.hpp"
#include "cubelab/function_spec.hpp"
#include "cubelab/generators.hpp"
#include "cubelab/influence.hpp"
#include "cubelab/json_io.hpp"
#include "cubelab/sweep.hpp"

using namespace cubelab;

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("0.05") == Rational(1, 20));
  CHECK(Rational::parse("1/3") == Rational(1, 3));
  CHECK(Rational::parse("2e-3") == Rational(1, 500));
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("7") == Rational(7, 1));
  CHECK(Rational::parse("1.5e1") == Rational(15, 1));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("function spec parsing and round trip") {
  const FunctionSpec t = FunctionSpec::parse("tribes:w=2,s=4");
  CHECK(t.kind == "tribes");
  CHECK(t.dimension() == 8);
  CHECK(FunctionSpec::parse(t.to_string()).to_string() == t.to_string());

  const FunctionSpec hex = FunctionSpec::parse("n=2:8");  // bare shorthand
  CHECK(hex.kind == "inline-hex");
  CHECK(hex.dimension() == 2);
  CHECK(hex.materialize() == BooleanFunction::from_hex("n=2:8"));
  CHECK(FunctionSpec::parse("inline-hex:n=2:8").materialize() == hex.materialize());

  CHECK(FunctionSpec::parse("subcube:k=3,n=8").materialize().count_ones() == 32);
  CHECK(FunctionSpec::parse("sharpness:w=2,l=2").dimension() == 10);

  CHECK_THROWS(FunctionSpec::parse("nonsense:n=3"));
  CHECK_THROWS(FunctionSpec::parse("tribes:w=2").dimension());  // missing s
  CHECK_THROWS(FunctionSpec::parse("majority:n=4").materialize());
}

TEST_CASE("spec materialization is deterministic") {
  const FunctionSpec r = FunctionSpec::parse("random:n=9,seed=5");
  CHECK(r.materialize() == r.materialize());
  const auto eval = r.evaluator();
  const BooleanFunction f = r.materialize();
  for (uint64_t x = 0; x < f.domain_size(); x += 7) CHECK(eval(x) == f.get(x));
}

TEST_CASE("json round trips") {
  CHECK(dyadic_from_json(to_json(Dyadic(175, 8))) == Dyadic(175, 8));
  CHECK(rational_from_json(to_json(Rational(81, 5))) == Rational(81, 5));

  const Dnf d = parse_dnf("1&!2|2&3", 3);
  const Dnf d2 = dnf_from_json(to_json(d));
  CHECK(format_dnf(d2) == "1&!2|2&3");

  const InfluenceReport r = report(majority_function(3));
  const InfluenceReport r2 = influence_report_from_json(to_json(r));
  CHECK(r2.mu == r.mu);
  CHECK(r2.total == r.total);
  CHECK(r2.per_coord == r.per_coord);
  CHECK(r2.M == r.M);
  CHECK(r2.kkl_bound == r.kkl_bound);
  CHECK(r2.max_coord == r.max_coord);

  const ApproxResult a = approximate(sharpness_example(2, 1), Rational(1, 5));
  const ApproxResult a2 = approx_result_from_json(to_json(a));
  CHECK(a2.error == a.error);
  CHECK(a2.budget == a.budget);
  CHECK(a2.size == a.size);
  CHECK(format_dnf(a2.dnf) == format_dnf(a.dnf));

  Estimate e;
  e.quantity = "measure";
  e.value = 0.25;
  e.half_width = 0.001;
  e.samples = 100;
  e.seed = 7;
  e.scale = 1.0;
  e.confidence = 0.999;
  const Estimate e2 = estimate_from_json(to_json(e));
  CHECK(e2.value == e.value);
  CHECK(e2.half_width == e.half_width);
  CHECK(e2.samples == e.samples);
}

TEST_CASE("sweep: smoke run, csv shape and reproducibility") {
  SweepConfig config;
  config.family = "exhaustive-n";
  config.n = 2;
  config.checks = {"iso", "kkl", "infind", "lemma6", "lemma12", "lemma14", "approx-cert"};
  std::ostringstream csv1, csv2;
  const SweepOutcome out1 = run_sweep(config, &csv1);
  const SweepOutcome out2 = run_sweep(config, &csv2);
  CHECK(out1.items == 16);
  CHECK(out1.failures == 0);
  CHECK(csv1.str() == csv2.str());
  CHECK(out1.summary.dump() == out2.summary.dump());

  // header + one line per function; the quoted spec field keeps the column
  // count fixed even though spec strings carry commas
  const std::string header = sweep_csv_header();
  const size_t columns = 1 + std::count(header.begin(), header.end(), ',');
  std::istringstream lines(csv1.str());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    if (count++ == 0) {
      CHECK(line == sweep_csv_header());
      continue;
    }
    size_t cells = 1;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') quoted = !quoted;
      if (c == ',' && !quoted) ++cells;
    }
    CHECK(cells == columns);
  }
  CHECK(count == 17);

  CHECK(out1.summary.at("schema_version").get<int>() == kSweepSchemaVersion);
  CHECK(out1.summary.at("reports").contains("lemma11"));
  CHECK(out1.summary.at("reports").contains("lemma4"));
  CHECK(out1.summary.at("reports").contains("c5_analogue"));
}

TEST_CASE("sweep: random family is seed-reproducible and parallel-invariant") {
  SweepConfig config;
  config.family = "random";
  config.n = 6;
  config.n_min = 4;
  config.count = 50;
  config.seed = 99;
  config.checks = {"iso", "kkl", "infind", "lemma6", "lemma12"};
  std::ostringstream csv1, csv2;
  const SweepOutcome out1 = run_sweep(config, &csv1);
  config.jobs = 3;
  const SweepOutcome out2 = run_sweep(config, &csv2);
  CHECK(out1.failures == 0);
  CHECK(csv1.str() == csv2.str());
  CHECK(out1.summary.dump() == out2.summary.dump());
}

TEST_CASE("sweep: generator grid") {
  SweepConfig config;
  config.family = "generator-grid";
  config.grid = "sharpness:w=2,l=0..3";
  config.checks = {"iso", "kkl", "infind"};
  const SweepOutcome out = run_sweep(config, nullptr);
  CHECK(out.items == 4);
  CHECK(out.failures == 0);

  config.grid = "";
  CHECK_THROWS(run_sweep(config, nullptr));
  config.family = "unknown";
  CHECK_THROWS(run_sweep(config, nullptr));
  config.family = "exhaustive-n";
  config.n = 5;
  CHECK_THROWS(run_sweep(config, nullptr));
  config.n = 2;
  config.checks = {"bogus"};
  CHECK_THROWS(run_sweep(config, nullptr));
}
