#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rogers/theta.hpp"

using namespace rogers;

TEST_CASE("MVec size and weight") {
  MVec m({2, 0, 1}); // m_2 = 2, m_4 = 1
  CHECK(m.nvars() == 4);
  CHECK(m.size() == 3);
  CHECK(m.weight() == 8);
  CHECK(m.mult(2) == 2);
  CHECK(m.mult(4) == 1);
  CHECK(MVec::unit(2, 4) == MVec({0, 1, 0}));
  CHECK(MVec::unit(2, 4).weight() == 3);
  CHECK((m - MVec::unit(1, 4)) == MVec({1, 0, 1}));
  CHECK((m - MVec::unit(2, 4)).has_negative());
  CHECK_THROWS_AS(MVec::unit(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(MVec::unit(0, 4), std::invalid_argument);
}

TEST_CASE("mvecs_up_to_weight") {
  const auto all = mvecs_up_to_weight(3, 4);
  // [0,0] [0,1] [1,0] [2,0]
  CHECK(all.size() == 4);
  CHECK(all.front() == MVec({0, 0}));
  for (const auto &m : all)
    CHECK(m.weight() <= 4);
  CHECK(mvecs_up_to_weight(2, -1).empty());
}

TEST_CASE("theta base cases and examples") {
  ThetaTable t2(2);
  CHECK(t2.theta(MVec::zero(2), 4, 7) == QPoly(1));
  CHECK(t2.theta(MVec({1}), 0, 5).is_zero());
  CHECK(t2.theta(MVec({1}), 1, 1) == QPoly{1, -1});
  CHECK(t2.theta(MVec({1}), 2, 2) == QPoly{1, 1, -1, -1});
  CHECK(t2.theta(MVec({1}), 2, 2) == QPoly{1, 1} * QPoly{1, 1} * QPoly{1, -1});
  // Negative arguments vanish.
  CHECK(t2.theta(MVec({-1}), 3, 3).is_zero());
  CHECK(t2.theta(MVec({1}), -1, 3).is_zero());
  CHECK(t2.theta(MVec::zero(2), 3, -2).is_zero());
}

TEST_CASE("theta table rejects a different l") {
  ThetaTable t3(3);
  CHECK_THROWS_AS(t3.theta(MVec({1}), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ThetaTable(1), std::invalid_argument);
}

TEST_CASE("theta results are memoized") {
  ThetaTable t3(3);
  QPoly first = t3.theta(MVec({1, 1}), 4, 4);
  const auto cached = t3.cached();
  CHECK(cached > 0);
  CHECK(t3.theta(MVec({1, 1}), 4, 4) == first);
  CHECK(t3.cached() == cached);
  // A fresh table recomputes the same value.
  ThetaTable fresh(3);
  CHECK(fresh.theta(MVec({1, 1}), 4, 4) == first);
}

TEST_CASE("closed forms: examples") {
  CHECK(theta_closed_uj(1, 0, 3).is_zero());
  CHECK(theta_closed_uj(1, 1, 1) == QPoly{1, -1});
  CHECK(theta_closed_uj(2, 1, 2) == QPoly{1, -1, -1, 1});

  CHECK(theta_closed_full(MVec::zero(3), 0, 5) == QPoly(1));
  CHECK(theta_closed_full(MVec({1}), 1, 2) == QPoly{1, 0, -1});
  CHECK(theta_closed_full(MVec({2}), 2, 2) == QPoly{1, -1, -1, 1});
  CHECK_THROWS_AS(theta_closed_full(MVec({2}), 1, 2), std::invalid_argument);

  CHECK(theta_closed_ru1(0, 3, 3) == QPoly(1));
  CHECK(theta_closed_ru1(1, 1, 1) == QPoly{1, -1});
  CHECK(theta_closed_ru1(2, 1, 5).is_zero());
}

TEST_CASE("recursion matches the u_j closed form, j <= 3, k,n <= 8") {
  ThetaTable table(4);
  for (std::size_t j = 1; j <= 3; ++j)
    for (int k = 0; k <= 8; ++k)
      for (int n = 0; n <= 8; ++n)
        REQUIRE(table.theta(MVec::unit(j, 4), k, n) == theta_closed_uj(static_cast<int>(j), k, n));
}

TEST_CASE("recursion matches the |m| = k closed form, k <= 4, n <= 8") {
  for (std::size_t l = 2; l <= 4; ++l) {
    ThetaTable table(l);
    for (int k = 0; k <= 4; ++k)
      for (int n = 0; n <= 8; ++n)
        for (const MVec &m : mvecs_up_to_weight(l, k + n))
          if (m.size() == k)
            REQUIRE(table.theta(m, k, n) == theta_closed_full(m, k, n));
  }
}

TEST_CASE("recursion matches the r u_1 closed form, r <= 4, k,n <= 8") {
  for (std::size_t l = 2; l <= 4; ++l) {
    ThetaTable table(l);
    for (int r = 0; r <= 4; ++r)
      for (int k = 0; k <= 8; ++k)
        for (int n = 0; n <= 8; ++n)
          REQUIRE(table.theta(MVec::unit(1, l).scaled(r), k, n) == theta_closed_ru1(r, k, n));
  }
}

TEST_CASE("theta is symmetric in k and n, k+n <= 12, l <= 4") {
  for (std::size_t l = 2; l <= 4; ++l) {
    ThetaTable table(l);
    for (int total = 0; total <= 12; ++total)
      for (int k = 0; k <= total; ++k)
        for (const MVec &m : mvecs_up_to_weight(l, total))
          REQUIRE(table.theta(m, k, total - k) == table.theta(m, total - k, k));
  }
}

TEST_CASE("theta vanishes exactly under the stated conditions") {
  for (std::size_t l = 2; l <= 4; ++l) {
    ThetaTable table(l);
    for (int total = 0; total <= 12; ++total)
      for (int k = 0; k <= total; ++k)
        for (const MVec &m : mvecs_up_to_weight(l, total + 2))
          REQUIRE(table.theta(m, k, total - k).is_zero() == theta_vanishes(m, k, total - k));
  }
}

TEST_CASE("appending zero coordinates does not change theta") {
  ThetaTable t2(2), t3(3), t4(4);
  for (int k = 0; k <= 6; ++k)
    for (int n = 0; n <= 6; ++n)
      for (const MVec &m : mvecs_up_to_weight(2, k + n)) {
        const int m2 = m.entries()[0];
        const QPoly v = t2.theta(m, k, n);
        REQUIRE(t3.theta(MVec({m2, 0}), k, n) == v);
        REQUIRE(t4.theta(MVec({m2, 0, 0}), k, n) == v);
      }
}
