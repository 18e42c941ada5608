#include <doctest.h>

#include <json.hpp>

#include "monideal/errors.hpp"
#include "monideal/runner.hpp"

using namespace monideal;
using nlohmann::json;

namespace {

RunReport run(const std::string& cmd, const std::string& text, RunOptions o = {}) {
  const auto doc = parse_document(text);
  return run_command(cmd, &doc, o);
}

} // namespace

TEST_CASE("vnum on the closure reports the witness") {
  RunOptions o;
  o.closure = true;
  o.power = 1;
  const auto r = run("vnum", "ring x y\nideal I = x^2, y^3\n", o);
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.json);
  CHECK(j["command"] == "vnum");
  CHECK(j["results"][0]["v"] == 2);
  CHECK(j["results"][0]["witness"] == "x*y");
  CHECK(r.text.find("x*y") != std::string::npos);
}

TEST_CASE("table on <x^2, y^2> has gap one at every row") {
  RunOptions o;
  o.nmax = 3;
  const auto r = run("table", "ring x y\nideal I = x^2, y^2\n", o);
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.json);
  REQUIRE(j["results"].size() == 3);
  for (const auto& row : j["results"]) {
    CHECK(row["gap"] == 1);
    CHECK(row["status"] == "ok");
  }
}

TEST_CASE("table marks formulas that do not apply") {
  RunOptions o;
  o.nmax = 1;
  const auto r = run("table", "ring x y z\nideal T = x*y, y*z, x*z\n", o);
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.json);
  CHECK(j["results"][0]["v_closure_formula"]["applicability"] == "not-applicable");
  CHECK(r.text.find(" - ") != std::string::npos);
}

TEST_CASE("budget exhaustion marks rows skipped") {
  RunOptions o;
  o.budget_seconds = 1e-9;
  o.power = 4;
  const auto r = run("closure", "ring a b c d e\nideal I = a^6*b^5, c^6*d^5*e^4, a*c^2*e^3\n", o);
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.json);
  CHECK(j["results"][0]["status"] == "skipped");
}

TEST_CASE("JSON output is deterministic and excludes timing unless asked") {
  const std::string doc = "ring x y z\nideal A = x^3, y*z^2\nideal B = x*y, y*z\n";
  for (const char* cmd : {"info", "decompose", "ass", "closure", "vnum", "table"}) {
    const auto a = run(cmd, doc);
    const auto b = run(cmd, doc);
    CHECK(a.json == b.json);
    CHECK(a.text == b.text);
    CHECK(a.json.find("seconds") == std::string::npos);
  }
  RunOptions o;
  o.timing = true;
  CHECK(json::parse(run("info", doc, o).json).contains("seconds"));
}

TEST_CASE("ideal filter and usage errors") {
  const std::string doc = "ring x y\nideal A = x^2\nideal B = x*y\n";
  RunOptions o;
  o.ideal_name = "B";
  const auto j = json::parse(run("info", doc, o).json);
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["ideal"] == "B");
  o.ideal_name = "C";
  CHECK_THROWS_AS(run("info", doc, o), UsageError);
  CHECK_THROWS_AS(run("frobnicate", doc), UsageError);
  CHECK_THROWS_AS(run_command("info", nullptr, {}), UsageError);
  RunOptions v;
  v.suite = "nope";
  CHECK_THROWS_AS(run_command("verify", nullptr, v), UsageError);
}

TEST_CASE("verify through the runner") {
  RunOptions o;
  o.suite = "ceil";
  o.trials = 10000;
  o.seed = 7;
  const auto r = run_command("verify", nullptr, o);
  CHECK(r.exit_code == 0);
  const auto j = json::parse(r.json);
  CHECK(j["seed"] == 7);
  CHECK(j["results"][0]["failed"] == 0);
}

TEST_CASE("info fields") {
  const auto j = json::parse(run("info", "ring x y z w\nideal I = x*y, z*w\n").json)["results"][0];
  CHECK(j["alpha"] == 2);
  CHECK(j["delta"] == 2);
  CHECK(j["height"] == 2);
  CHECK(j["complete_intersection"] == true);
  CHECK(j["equigenerated"] == true);
}
