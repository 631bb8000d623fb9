#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rogers/multipoly.hpp"

#include <algorithm>
#include <numeric>

using namespace rogers;

namespace {

MultiPoly t(std::size_t l, std::size_t i) { return MultiPoly::variable(l, i); }

} // namespace

TEST_CASE("ring operations") {
  const MultiPoly s = t(2, 0) + t(2, 1);
  CHECK((s * MultiPoly(2)).is_zero());

  MultiPoly square(2);
  square.add_term({2, 0}, 1);
  square.add_term({1, 1}, 2);
  square.add_term({0, 2}, 1);
  CHECK(mp_mul(s, s) == square);

  MultiPoly scaled(2);
  scaled.add_term({1, 1}, QPoly{1, -1});
  CHECK(mp_scale(QPoly{1, -1}, t(2, 0) * t(2, 1)) == scaled);
  CHECK(mp_scale(QPoly{}, s).is_zero());

  CHECK(mp_add(s, MultiPoly(2) - s).is_zero());
}

TEST_CASE("zero coefficients are never stored") {
  MultiPoly p(2);
  p.add_term({1, 0}, QPoly{0, 1});
  p.add_term({1, 0}, QPoly{0, -1});
  CHECK(p.is_zero());
  p.add_term({0, 1}, QPoly{});
  CHECK(p.terms().empty());
}

TEST_CASE("mismatched variable counts are rejected") {
  CHECK_THROWS_AS(t(2, 0) + t(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(t(2, 0) * t(3, 0), std::invalid_argument);
  MultiPoly p(2);
  CHECK_THROWS_AS(p.add_term({1, 0, 0}, 1), std::invalid_argument);
}

TEST_CASE("elementary") {
  CHECK(elementary(0, 3) == MultiPoly::constant(3, 1));
  CHECK(elementary(2, 2) == t(2, 0) * t(2, 1));
  CHECK(elementary(3, 2).is_zero());
  CHECK(elementary(2, 4).terms().size() == 6);
  CHECK(elementary(1, 3) == t(3, 0) + t(3, 1) + t(3, 2));
}

TEST_CASE("compositions are enumerated lexicographically") {
  std::vector<std::vector<int>> seen;
  for_each_composition(2, 2, [&](const std::vector<int> &c) { seen.push_back(c); });
  CHECK(seen == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
  int count = 0;
  for_each_composition(5, 3, [&](const std::vector<int> &) { ++count; });
  CHECK(count == 21);
}

TEST_CASE("htilde_direct") {
  for (std::size_t l = 1; l <= 4; ++l)
    CHECK(htilde_direct(0, l) == MultiPoly::constant(l, 1));
  CHECK(htilde_direct(1, 2) == t(2, 0) + t(2, 1));

  MultiPoly h2(2);
  h2.add_term({2, 0}, 1);
  h2.add_term({1, 1}, QPoly{1, 1});
  h2.add_term({0, 2}, 1);
  CHECK(htilde_direct(2, 2) == h2);
}

TEST_CASE("specialize_all_ones") {
  CHECK(specialize_all_ones(t(2, 0) + t(2, 1)) == QPoly(2));
  CHECK(specialize_all_ones(htilde_direct(2, 2)) == QPoly{3, 1});
  CHECK(specialize_all_ones(MultiPoly(3)).is_zero());
}

TEST_CASE("htilde is homogeneous and symmetric") {
  for (std::size_t l = 1; l <= 4; ++l) {
    std::vector<std::size_t> perm(l);
    for (int n = 0; n <= 6; ++n) {
      const MultiPoly h = htilde_direct(n, l);
      REQUIRE(h.is_homogeneous(static_cast<unsigned>(n)));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        REQUIRE(h.permuted(perm) == h);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("setting the last variable to zero drops to l variables") {
  for (std::size_t l = 1; l <= 3; ++l)
    for (int n = 0; n <= 5; ++n)
      REQUIRE(htilde_direct(n, l + 1).substitute(l, 0) == htilde_direct(n, l));
}

TEST_CASE("H~_n(t, 1) has the q-binomials as coefficients") {
  for (int n = 0; n <= 8; ++n) {
    const MultiPoly h = htilde_direct(n, 2).substitute(1, 1);
    REQUIRE(h.nvars() == 1);
    for (int r = 0; r <= n; ++r)
      REQUIRE(h.coeff({static_cast<unsigned>(r)}) == qbinomial(n, r));
    REQUIRE(h.terms().size() == static_cast<std::size_t>(n + 1));
  }
}

TEST_CASE("substitute rejects other values") {
  CHECK_THROWS_AS(t(2, 0).substitute(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(t(2, 0).substitute(2, 0), std::out_of_range);
}

TEST_CASE("to_string and json") {
  CHECK(htilde_direct(2, 2).to_string() == "t1^2 + (1 + q)*t1*t2 + t2^2");
  CHECK(MultiPoly(2).to_string() == "0");
  CHECK(mp_scale(QPoly{-3}, t(2, 1)).to_string() == "-3*t2");

  const nlohmann::json j = htilde_direct(2, 2);
  CHECK(j.dump() == R"([{"coeff":["1"],"exponents":[0,2]},)"
                    R"({"coeff":["1","1"],"exponents":[1,1]},)"
                    R"({"coeff":["1"],"exponents":[2,0]}])");
}
