#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crext/errors.hpp"
#include "crext/report.hpp"
#include "crext/suite.hpp"

#include <cmath>
#include <limits>

using namespace crext;
using namespace crext::report;

TEST_CASE("empty report") {
  VerificationReport rep;
  CHECK(rep.all_pass());
  Json j = rep.to_json();
  CHECK(j["entries"].empty());
  CHECK(j["summary"]["total"] == 0);
  CHECK(j["summary"]["all_pass"] == true);
}

TEST_CASE("entries, summaries and NaN handling") {
  VerificationReport rep;
  rep.add(make_entry("algebra.a", "anchor text", Json{{"k", 2}}, 0.0, 0.0));
  rep.add(make_entry("dtn.b", "x", Json::object(), 2e-9, 1e-8));
  rep.add(make_entry("dtn.c", "y", Json::object(), std::numeric_limits<double>::quiet_NaN(), 1.0));
  CHECK_FALSE(rep.all_pass());
  auto s = rep.summary();
  REQUIRE(s.size() == 2);
  CHECK(s[0].suite == "algebra");
  CHECK(s[1].suite == "dtn");
  CHECK(s[1].total == 2);
  CHECK(s[1].failed == 1);
  CHECK(suite_of("energy.trace.equality") == "energy");
}

TEST_CASE("rendering is deterministic and the table carries the anchor") {
  VerificationReport rep;
  rep.add(make_entry("spectral.x", "some description", Json{{"gamma", 0.5}}, 1e-13, 1e-12));
  CHECK(render_report(rep, Format::json) == render_report(rep, Format::json));
  const std::string table = render_report(rep, Format::table);
  CHECK(table.find("some description") != std::string::npos);
  CHECK(table.find("ALL PASS") != std::string::npos);
  CHECK(parse_format("table") == Format::table);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("emit_report to an unwritable path") {
  CHECK_THROWS_AS(emit_report(VerificationReport{}, Format::json, "/nonexistent/dir/out.json"), std::runtime_error);
}

TEST_CASE("config parsing") {
  suite::SuiteConfig c = suite::parse_config(Json::parse(R"({"suites": ["dtn", "algebra"], "gamma_list": [0.5]})"));
  suite::validate(c);
  CHECK(c.suites == std::vector<std::string>{"algebra", "dtn"});

  suite::SuiteConfig all;
  suite::validate(all);
  CHECK(all.suites == suite::suite_names());

  CHECK_THROWS_AS(suite::parse_config(Json::parse(R"({"gama_list": [0.5]})")), ConfigError);
  try {
    suite::SuiteConfig bad = suite::parse_config(Json::parse(R"({"gamma_list": [0.5, 1]})"));
    suite::validate(bad);
    FAIL("gamma 1 accepted");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
  suite::SuiteConfig empty = suite::parse_config(Json::parse(R"({"mode_grid": {"lambda": [], "k": [0], "n": [1]}})"));
  CHECK_THROWS_AS(suite::validate(empty), ConfigError);
  suite::SuiteConfig unknown = suite::parse_config(Json::parse(R"({"suites": ["nope"]})"));
  CHECK_THROWS_AS(suite::validate(unknown), ConfigError);
  suite::SuiteConfig tol = suite::parse_config(Json::parse(R"({"tolerances": {"dtn": -1}})"));
  CHECK_THROWS_AS(suite::validate(tol), ConfigError);
  CHECK_THROWS_AS(suite::load_config("/nonexistent.json"), ConfigError);
}

TEST_CASE("tolerance overrides apply by longest prefix") {
  suite::SuiteConfig c;
  c.suites = {"algebra"};
  c.factorization_max_k = 2;
  c.commutator_max_k = 3;
  c.tolerances = {{"algebra", 5.0}, {"algebra.commutator_chain", 7.0}};
  VerificationReport rep = suite::run_suite(c);
  for (const auto& e : rep.entries()) {
    CHECK(e.tolerance == (e.check_id == "algebra.commutator_chain" ? 7.0 : 5.0));
  }
}
