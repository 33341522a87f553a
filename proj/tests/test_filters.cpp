#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "expdioph/arith.hpp"
#include "expdioph/filters.hpp"
#include "expdioph/search.hpp"

using namespace expdioph;

TEST_CASE("imp_valuation") {
  CHECK(imp_valuation(4, 2, 2, 1, 3, 2) == 0);
  CHECK_FALSE(imp_filter(4, 2, 2, 1, 3, 2).passed());
  CHECK_FALSE(imp_valuation(4, 2, 2, 3, 13, 2).has_value());
  CHECK(imp_filter(4, 2, 2, 3, 13, 2).passed());
  // v3(3) = 1 and v3(x+z) = 0 < 1 + 1: applicable, predicts 0 != 1
  CHECK(imp_valuation(3, 3, 2, 1, 2, 3) == 0);
  CHECK_FALSE(imp_filter(3, 3, 2, 1, 2, 3).passed());
  CHECK_THROWS_AS(imp_valuation(4, 1, 2, 1, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(imp_valuation(4, 2, 2, 1, 3, 3), std::invalid_argument);
}

TEST_CASE("lemma_y") {
  CHECK(lemma_y(4, 3) == 3);
  CHECK(lemma_y(3, 2) == 1);
  CHECK_FALSE(lemma_y(2, 2).has_value());
  CHECK_THROWS_AS(lemma_y(4, 1), std::invalid_argument);
}

TEST_CASE("lemma_ineq") {
  CHECK(lemma_ineq(2, 2, 1, 2, 2).passed());
  CHECK_FALSE(lemma_ineq(2, 8, 1, 6, 4).passed());
  CHECK(lemma_ineq(2, 2, 1, 1, 1).passed());
}

TEST_CASE("z_parity_filter") {
  CHECK_FALSE(z_parity_filter(2, 3).passed());
  CHECK(z_parity_filter(2, 4).passed());
  CHECK_FALSE(z_parity_filter(5, 1).passed());
}

TEST_CASE("divisibility_filter") {
  CHECK(divisibility_filter(4, 2, 2).passed());
  CHECK_FALSE(divisibility_filter(3, 2, 5).passed());
  CHECK_FALSE(divisibility_filter(2, 1, 1).passed());
}

TEST_CASE("y1_m_filter") {
  CHECK_FALSE(y1_m_filter(3, 2, 1).passed());
  CHECK(y1_m_filter(3, 1, 1).passed());
  CHECK(y1_m_filter(2, 5, 2).passed());
}

TEST_CASE("mod4_filter_m1") {
  CHECK_FALSE(mod4_filter_m1(3, 1, 2).passed());
  CHECK(mod4_filter_m1(2, 1, 2).passed());
  CHECK_FALSE(mod4_filter_m1(5, 3, 4).passed());
}

TEST_CASE("verdicts carry a reason") {
  auto v = z_parity_filter(2, 3);
  CHECK(v.filter == "z_parity");
  CHECK_FALSE(v.reason.empty());
  auto p = run_pipeline(4, 2, 1, 2, 3);
  REQUIRE_FALSE(p.empty());
  CHECK_FALSE(p.back().passed());
}

TEST_CASE("identity scans") {
  CHECK(identity_scan(IdentityId::Eq21, {2, 1000}, {2, 1000}, {2, 30}).empty());
  CHECK(identity_scan(IdentityId::Eq22, {1, 1000000}, {0, 0}, {4, 64}).empty());
  CHECK(identity_scan(IdentityId::Eq23, {1, 1000000}, {0, 0}, {4, 64}).empty());
  CHECK(parse_identity("eq22") == IdentityId::Eq22);
  CHECK_THROWS(parse_identity("eq24"));
}

TEST_CASE("property: no filter excludes an exact solution") {
  SearchBox box{{2, 12}, {1, 12}, {1, 16}, {1, 16}, {1, 16}};
  const auto sols = oracle_search(box);
  REQUIRE(sols.size() == 2);
  for (const auto& s : sols) CHECK(pipeline_passes(s.a(), s.m(), s.x(), s.y(), s.z()));
  // planted tuples of the generic shape the filters reason about
  for (std::uint64_t a = 2; a <= 40; ++a)
    for (std::uint64_t m = 1; m <= 40; ++m)
      for (std::uint64_t x = 1; x <= 6; ++x)
        for (std::uint64_t y = 1; y <= 6; ++y)
          for (std::uint64_t z = 1; z <= 7; ++z)
            if (check_family(Instance(a, m), {x, y, z})) REQUIRE(pipeline_passes(a, m, x, y, z));
}

TEST_CASE("property: lemma_y alternate form") {
  for (std::uint64_t a = 2; a <= 300; ++a)
    for (std::uint64_t m = 2; m <= 300; ++m) {
      const unsigned va = vp(2, a), v2m = vp(2, 2 * m);
      const auto y = lemma_y(a, m);
      if (va % v2m == 0) {
        REQUIRE(y == va / v2m + 1);
      } else {
        REQUIRE_FALSE(y.has_value());
      }
    }
}

TEST_CASE("property: lemma_ineq monotone in y when 2m > x+z") {
  for (std::uint64_t a = 2; a <= 12; ++a)
    for (std::uint64_t m = 2; m <= 40; ++m)
      for (std::uint64_t x = 1; x <= 8; ++x)
        for (std::uint64_t z = 1; z <= 8; ++z) {
          if (2 * m <= x + z) continue;
          bool excluded = false;
          for (std::uint64_t y = 1; y <= 40; ++y) {
            const bool ex = !lemma_ineq(a, m, x, y, z).passed();
            if (excluded) REQUIRE(ex);
            excluded = ex;
          }
        }
}

TEST_CASE("property: divisibility equals valuation condition") {
  for (std::uint64_t a = 2; a <= 200; ++a)
    for (std::uint64_t m = 1; m <= 60; ++m)
      for (std::uint64_t y = 1; y <= 8; ++y) {
        bool cond = true;
        for (auto p : prime_factors(a)) {
          if ((2 * m) % p != 0 || vp(p, a) > (y - 1) * vp(p, 2 * m)) cond = false;
        }
        REQUIRE(divisibility_filter(a, m, y).passed() == cond);
      }
}
