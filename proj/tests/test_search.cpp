#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "expdioph/arith.hpp"
#include "expdioph/search.hpp"

using namespace expdioph;

namespace {

std::vector<std::array<std::uint64_t, 5>> tuples(const std::vector<Solution>& v) {
  std::vector<std::array<std::uint64_t, 5>> out;
  for (const auto& s : v) out.push_back({s.a(), s.m(), s.x(), s.y(), s.z()});
  return out;
}

}  // namespace

TEST_CASE("oracle_search") {
  const auto all = oracle_search({{2, 12}, {1, 12}, {1, 16}, {1, 16}, {1, 16}});
  CHECK(tuples(all) == std::vector<std::array<std::uint64_t, 5>>{{2, 1, 1, 2, 2}, {2, 1, 2, 1, 3}});
  CHECK(oracle_search({{3, 12}, {1, 12}, {1, 16}, {1, 16}, {1, 16}}).empty());
  CHECK(oracle_search({{5, 4}, {1, 12}, {1, 16}, {1, 16}, {1, 16}}).empty());
  CHECK_THROWS_AS(oracle_search({{1, 4}, {1, 2}, {1, 2}, {1, 2}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(oracle_search({{2, 4}, {0, 2}, {1, 2}, {1, 2}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("corollary_search") {
  using T = std::array<std::uint64_t, 4>;
  auto c = corollary_search(501, 60);
  std::sort(c.begin(), c.end());
  CHECK(c == std::vector<T>{{5, 1, 2, 2}, {5, 2, 1, 3}});
  CHECK(corollary_search(3, 10).empty());
  CHECK_THROWS_AS(corollary_search(500, 10), std::invalid_argument);
  CHECK_THROWS_AS(corollary_search(1, 10), std::invalid_argument);
}

TEST_CASE("make_work_unit preconditions") {
  const BoundSet& b = build_bound_set();
  CHECK_THROWS_AS(make_work_unit(b, 2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_work_unit(b, 2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_work_unit(b, 2, 2, 11), std::invalid_argument);
  CHECK_THROWS_AS(make_work_unit(b, 3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_work_unit(b, 4, 1000, 2), std::invalid_argument);  // 2am+1 >= 5044
  const WorkUnit u = make_work_unit(b, 4, 2, 2);
  CHECK(u.window.x_min == 9);
  CHECK(u.window.x_max == 6829);  // 2522 log 15 = 6829.7
}

TEST_CASE("partition_work") {
  const BoundSet& b = build_bound_set();
  for (std::uint64_t y = 2; y <= 10; ++y) {
    const auto units = partition_work(b, y);
    CHECK_FALSE(units.empty());
    for (std::size_t i = 0; i < units.size(); ++i) {
      const auto& u = units[i];
      REQUIRE(u.m >= 2);
      REQUIRE(u.y == y);
      REQUIRE(2 * u.a * u.m + 1 < 5044);
      REQUIRE(divisibility_filter(u.a, u.m, y).passed());
      if (y == 2) {
        REQUIRE(vp(2, u.a) == vp(2, 2 * u.m));
        REQUIRE((2 * u.m) % u.a == 0);
      }
      if (y > 6) REQUIRE(u.m % 2 == 1);
      if (i > 0) {
        const auto& p = units[i - 1];
        REQUIRE(std::make_pair(p.a * p.m, p.a) < std::make_pair(u.a * u.m, u.a));
      }
    }
  }
  // brute-force count for y = 2
  std::size_t want = 0;
  for (std::uint64_t m = 2; 4 * m + 1 < 5044; ++m)
    for (std::uint64_t a = 2; 2 * a * m + 1 < 5044; ++a)
      if ((2 * m) % a == 0 && vp(2, a) == vp(2, 2 * m)) ++want;
  CHECK(partition_work(b, 2).size() == want);
  CHECK_THROWS_AS(partition_work(b, 1), std::invalid_argument);
  CHECK_THROWS_AS(partition_work(b, 11), std::invalid_argument);
}

TEST_CASE("sieve passes true solutions and scan_box finds them") {
  const ModularSieve s(2, 1, 2);
  CHECK(s.rejecting_prime(1, 2) == 0);
  for (auto p : s.primes()) CHECK(std::uint64_t(2 * 5 * 3) % p != 0);
  const auto r = scan_box(2, 1, 2, {1, 41}, {1, 40});
  CHECK(r.found == std::vector<FamilyTuple>{{2, 1, 1, 2, 2}});
  CHECK(r.stats.exact_checks >= 1);
  CHECK(r.stats.sieve_rejected + r.stats.exact_checks == r.stats.candidates);
}

TEST_CASE("property: sieve rejections are real non-solutions") {
  std::mt19937_64 rng(29);
  std::size_t rejections = 0;
  while (rejections < 100000) {
    const std::uint64_t a = 2 + rng() % 30, m = 1 + rng() % 30, y = 1 + rng() % 12;
    const ModularSieve s(a, m, y);
    const Terms t = terms(Instance(a, m));
    for (int k = 0; k < 50; ++k) {
      const std::uint64_t x = 1 + rng() % 60;
      const std::uint64_t z = 1 + rng() % 60;
      if (s.rejecting_prime(x, z) == 0) continue;
      REQUIRE(cmp_powersum(t.A, x, t.B, y, t.C, z) != Ordering::Equal);
      ++rejections;
    }
  }
  CHECK(rejections == 100000);
}

TEST_CASE("incremental residues match direct residues") {
  const ModularSieve s(6, 3, 2);
  std::array<std::uint32_t, ModularSieve::kPrimeCount> ax{};
  for (std::uint64_t x = 1; x < 40; ++x) {
    for (std::size_t i = 0; i < ax.size(); ++i) ax[i] = modpow_u32(37, x, s.primes()[i]);
    for (std::uint64_t z = 1; z < 40; ++z) REQUIRE(s.rejecting_prime(ax, z) == s.rejecting_prime(x, z));
  }
}

TEST_CASE("property: region machinery agrees with the oracle") {
  const SearchBox box{{2, 12}, {1, 12}, {1, 16}, {1, 16}, {1, 16}};
  std::vector<Solution> want;
  for (const auto& s : oracle_search(box))
    if (s.x() % 2 == 1 && s.z() % 2 == 0 && s.m() >= 2) want.push_back(s);
  CHECK(theorem_search_box(box) == want);
  // m = 1 is outside the region, even though (2,1,1,2,2) has the right parities
  CHECK(theorem_search_box({{2, 2}, {1, 1}, {1, 5}, {1, 5}, {1, 5}}).empty());
}

TEST_CASE("theorem_search y = 7 and y = 10") {
  const BoundSet& b = build_bound_set();
  for (std::uint64_t y : {7, 10}) {
    const auto r = theorem_search(b, y);
    CHECK(r.solutions.empty());
    CHECK(r.units_done == r.units_total);
    CHECK(r.units_total == partition_work(b, y).size());
  }
}

TEST_CASE("property: report independent of worker count") {
  const BoundSet& b = build_bound_set();
  SearchOptions one, four;
  four.threads = 4;
  const auto r1 = report_to_json(theorem_search(b, 6, one), true);
  const auto r4 = report_to_json(theorem_search(b, 6, four), true);
  CHECK(r1.dump() == r4.dump());
}
