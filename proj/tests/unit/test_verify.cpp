#include <doctest.h>

#include "monideal/decompose.hpp"
#include "monideal/errors.hpp"
#include "monideal/verify.hpp"

using namespace monideal;

namespace {

SuiteReport small(const std::string& name, std::uint64_t trials, std::uint64_t seed = 1) {
  SuiteOptions o;
  o.trials = trials;
  o.seed = seed;
  return run_suite(name, o);
}

void require_clean(const SuiteReport& r) {
  for (const auto& c : r.cases) {
    INFO(r.suite << ": " << c.label << " expected " << c.expected << " observed " << c.observed);
    CHECK(c.status == CaseStatus::Pass);
  }
  CHECK(r.ok());
  CHECK(r.passed == r.cases.size());
}

} // namespace

TEST_CASE("suite names") {
  CHECK(suite_names() == std::vector<std::string>{"theorem-ci", "gen-k2", "threegen", "uppbnd-h2", "wog", "ceil",
                                                  "final-corollary"});
  CHECK_THROWS_AS(small("nope", 1), UsageError);
}

TEST_CASE("every suite passes at reduced size") {
  for (const auto& name : suite_names()) {
    SUBCASE(name.c_str()) {
      const auto r = small(name, 3);
      CHECK(r.suite == name);
      CHECK_FALSE(r.cases.empty());
      require_clean(r);
    }
  }
}

TEST_CASE("seeded runs are reproducible") {
  const auto a = small("theorem-ci", 5, 99);
  const auto b = small("theorem-ci", 5, 99);
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].label == b.cases[i].label);
    CHECK(a.cases[i].observed == b.cases[i].observed);
  }
}

TEST_CASE("an exhausted budget skips instead of failing") {
  SuiteOptions o;
  o.trials = 2;
  o.budget_seconds = 1e-9;
  const auto r = run_suite("threegen", o);
  CHECK(r.failed == 0);
  CHECK(r.skipped > 0);
}

TEST_CASE("random generators") {
  std::mt19937_64 rng(8);
  const auto ring = standard_ring(5);
  CHECK(ring->name(0) == "x1");
  for (int i = 0; i < 100; ++i) {
    const auto ci = random_ci(rng, ring, 3, 3);
    CHECK(ci.is_proper());
    CHECK(is_complete_intersection(ci));
    CHECK(ci.num_gens() <= 3);
    const auto I = random_ideal(rng, ring, 4, 2);
    CHECK(I.is_proper());
    CHECK(I.num_gens() <= 4);
    const auto E = random_ideal(rng, ring, 4, 3, 3);
    CHECK(is_equigenerated(E));
    CHECK(alpha(E) == 3);
  }
}
