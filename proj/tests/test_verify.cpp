#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rogers/verify.hpp"

#include <algorithm>

using namespace rogers;

TEST_CASE("product_general sweep counts one cell per (k, n)") {
  const auto reports = run_sweep({2, 4, 4, {"product_general"}});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].name == "product_general");
  CHECK(reports[0].passed == 25);
  CHECK(reports[0].total == 25);
  CHECK(reports[0].ok());
  CHECK_FALSE(reports[0].counterexample.has_value());
}

TEST_CASE("theta_symmetry sweep in three variables") {
  const auto reports = run_sweep({3, 3, 3, {"theta_symmetry"}});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].ok());
  CHECK(reports[0].total == 16);
}

TEST_CASE("every registered check passes on a small box") {
  const auto reports = run_sweep({3, 3, 3, {}});
  CHECK(reports.size() == registered_checks().size());
  for (const auto &r : reports) {
    INFO(r.name);
    CHECK(r.ok());
    CHECK(r.total > 0);
  }
}

TEST_CASE("checks run in the requested order") {
  const auto reports = run_sweep({2, 1, 1, {"lemma_e1n", "htilde_recursion"}});
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].name == "lemma_e1n");
  CHECK(reports[1].name == "htilde_recursion");
}

TEST_CASE("bad sweeps are rejected") {
  CHECK_THROWS_AS(run_sweep({2, 1, 1, {"no_such"}}), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep({1, 1, 1, {}}), std::invalid_argument);
  CHECK_THROWS_AS(run_sweep({2, -1, 1, {}}), std::invalid_argument);
}

TEST_CASE("registry names are unique") {
  auto names = registered_checks();
  std::sort(names.begin(), names.end());
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}
