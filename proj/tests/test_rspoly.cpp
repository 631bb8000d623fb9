#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rogers/rspoly.hpp"

using namespace rogers;

TEST_CASE("h_univariate") {
  CHECK(h_univariate(0) == TPoly({QPoly(1)}));
  CHECK(h_univariate(1) == TPoly({QPoly(1), QPoly(1)}));
  CHECK(h_univariate(2) == TPoly({QPoly(1), QPoly{1, 1}, QPoly(1)}));
  CHECK(h_univariate(2).to_string() == "1 + (1 + q)*t + t^2");
}

TEST_CASE("htilde_rec") {
  RSContext ctx(2);
  CHECK(ctx.htilde(-3).is_zero());
  CHECK(htilde_rec(1, ctx) == MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1));
  CHECK(htilde_rec(2, ctx) == htilde_direct(2, 2));
  // e1 H~1 - (1-q) e2 H~0
  CHECK(htilde_rec(2, ctx) ==
        elementary(1, 2) * htilde_direct(1, 2) - QPoly{1, -1} * elementary(2, 2));
}

TEST_CASE("recursion agrees with the defining sum, n <= 8, l <= 4") {
  for (std::size_t l = 1; l <= 4; ++l) {
    RSContext ctx(l);
    for (int n = 0; n <= 8; ++n)
      REQUIRE(ctx.htilde(n) == htilde_direct(n, l));
  }
}

TEST_CASE("product_classical examples") {
  CHECK(product_classical(0, 5) == h_univariate(5));
  CHECK(product_classical(1, 1) == TPoly({QPoly(1), QPoly(2), QPoly(1)}));
  CHECK(product_classical(1, 2) == h_univariate(1) * h_univariate(2));
}

TEST_CASE("classical product formula, k,n <= 8") {
  for (int k = 0; k <= 8; ++k)
    for (int n = 0; n <= 8; ++n)
      REQUIRE(product_classical(k, n) == h_univariate(k) * h_univariate(n));
}

TEST_CASE("product_general examples") {
  {
    RSContext ctx(3);
    ThetaTable table(3);
    CHECK(product_general(0, 4, ctx, table) == htilde_direct(4, 3));
    CHECK(product_general(2, 2, ctx, table) == htilde_direct(2, 3) * htilde_direct(2, 3));
  }
  {
    RSContext ctx(2);
    ThetaTable table(2);
    const MultiPoly s = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
    CHECK(product_general(1, 1, ctx, table) == s * s);
    CHECK(product_general(1, 1, ctx, table) == htilde_direct(2, 2) + QPoly{1, -1} * elementary(2, 2));

    const auto terms = product_general_terms(1, 1, table);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].m == MVec({0}));
    CHECK(terms[0].signed_theta == QPoly(1));
    CHECK(terms[1].m == MVec({1}));
    CHECK(terms[1].signed_theta == QPoly{1, -1}); // wt 2: sign +
  }
}

TEST_CASE("product_general rejects mismatched l") {
  RSContext ctx(3);
  ThetaTable table(2);
  CHECK_THROWS_AS(product_general(1, 1, ctx, table), std::invalid_argument);
}

TEST_CASE("generalized product formula, k,n <= 6, l in {2,3,4}") {
  for (std::size_t l = 2; l <= 4; ++l) {
    RSContext ctx(l);
    ThetaTable table(l);
    for (int k = 0; k <= 6; ++k)
      for (int n = 0; n <= 6; ++n)
        REQUIRE(product_general(k, n, ctx, table) == htilde_direct(k, l) * htilde_direct(n, l));
  }
}

TEST_CASE("t_2 = 1 reduces the two-variable formula to the classical one") {
  RSContext ctx(2);
  ThetaTable table(2);
  for (int k = 0; k <= 6; ++k)
    for (int n = 0; n <= 6; ++n)
      REQUIRE(TPoly::from_multipoly(product_general(k, n, ctx, table).substitute(1, 1)) ==
              product_classical(k, n));
}

TEST_CASE("galois") {
  CHECK(galois(0, 3) == QPoly(1));
  CHECK(galois(2, 2) == QPoly{3, 1});
  CHECK(galois(2, 2).evaluate(Integer(2)) == 5);
  CHECK(galois(2, 3) == QPoly{6, 3});
}

TEST_CASE("Galois numbers at q = 2 count flags over GF(2)") {
  for (int n = 0; n <= 4; ++n) {
    REQUIRE(galois(n, 2).evaluate(Integer(2)) == oracle::count_flags_gf2(n, 1));
    REQUIRE(galois(n, 3).evaluate(Integer(2)) == oracle::count_flags_gf2(n, 2));
  }
  CHECK(oracle::subspaces_gf2(4).size() == 67);
}

TEST_CASE("all-ones specialization of the product formula") {
  for (std::size_t l = 2; l <= 3; ++l) {
    RSContext ctx(l);
    ThetaTable table(l);
    for (int k = 0; k <= 5; ++k)
      for (int n = 0; n <= 5; ++n) {
        const QPoly lhs = galois(k, l) * galois(n, l);
        REQUIRE(galois_alternating_sum(k, n, table) == lhs);
        REQUIRE(specialize_all_ones(product_general(k, n, ctx, table)) == lhs);
      }
  }
}

TEST_CASE("TPoly helpers") {
  CHECK(TPoly().to_string() == "0");
  CHECK(TPoly({QPoly{}, QPoly(-1)}).to_string() == "-t");
  CHECK(TPoly({QPoly(1), QPoly{}, QPoly{}}).coeffs().size() == 1);
  CHECK_THROWS_AS(TPoly::from_multipoly(MultiPoly(2)), std::invalid_argument);
  nlohmann::json j = h_univariate(1);
  CHECK(j.dump() == R"([["1"],["1"]])");
}
