#include "doctest.h"
#include "plactic/checks.hpp"

using namespace plactic;

TEST_CASE("every suite passes at n = 1") {
  CHECK(run_cross_section_check(1, 4).ok());
  CHECK(run_congruence_check(1, 4).ok());
  CHECK(run_lemma_checks(1).ok());
  CHECK(run_confluence_check(1, 4, {1, 2}).ok());
  CHECK(run_sheats_check(1).ok());
  CHECK(run_orientation_check(1).ok());
  CHECK(run_tietze_check(1).ok());
  CHECK(run_local_confluence_check(1).ok());
  CHECK(run_crystal_check(1, 6).ok());
  CHECK(run_reading_check(1, 4).ok());
}

TEST_CASE("default campaign passes") {
  for (auto const& r : run_all_checks(CheckOptions{})) {
    INFO(r.suite);
    CHECK(r.ok());
    CHECK(r.cases > 0);
    CHECK(r.cases == r.passes + r.failures);
  }
}

TEST_CASE("larger scale spot checks") {
  CHECK(run_congruence_check(2, 6).ok());
  CHECK(run_local_confluence_check(4, 2'000, 3).ok());
  CHECK(run_reading_check(3, 2).ok());
  CHECK(run_crystal_check(4, 3).ok());
}

TEST_CASE("single-word universe") {
  auto const r = run_cross_section_check(1, 1);
  CHECK(r.cases == 2);
  CHECK(r.ok());
}

TEST_CASE("budget refusal carries the estimate") {
  try {
    run_cross_section_check(4, 10, 1'000);
    FAIL("expected refusal");
  } catch (BudgetExceeded const& e) {
    CHECK(e.estimate() > 1'000);
  }
}

TEST_CASE("reports round trip through JSON") {
  auto r = run_sheats_check(2);
  CHECK(nlohmann::json(r).get<CheckReport>() == r);
  r.record(false, {{"word", "1 2"}});
  CHECK_FALSE(r.ok());
  auto const back = nlohmann::json(r).get<CheckReport>();
  CHECK(back == r);
  REQUIRE(back.witness);
  CHECK(back.witness->at("word") == "1 2");
}
