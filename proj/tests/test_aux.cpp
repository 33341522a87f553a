#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "expdioph/aux.hpp"

using namespace expdioph;

using V = std::vector<AuxTuple>;

TEST_CASE("ids") {
  CHECK(all_aux_ids().size() == 6);
  for (auto id : all_aux_ids()) CHECK(parse_aux_id(to_string(id)) == id);
  CHECK_THROWS_AS(parse_aux_id("foo"), std::invalid_argument);
}

TEST_CASE("na53 and pillai35") {
  auto r = verify_aux(AuxId::Na53, {0, 0, 300, 0, 0});
  CHECK(r.solutions == V{{2, 3}});
  CHECK(r.pass);
  r = verify_aux(AuxId::Pillai35, {0, 0, 300, 0, 0});
  CHECK(r.solutions == V{{2, 3}});
  CHECK(r.pass);
}

TEST_CASE("le") {
  const auto r = verify_aux(AuxId::Le, {60, 0, 20, 3, 8});
  CHECK(r.solutions == V{{5, 3, 1, 3}, {7, 3, 5, 4}, {11, 5, 2, 3}});
  CHECK(r.pass);
  // small box missing (11,5,2,3) fails against the published list
  CHECK_FALSE(verify_aux(AuxId::Le, {10, 0, 20, 3, 8}).pass);
}

TEST_CASE("terai4 small box") {
  // 7^2 + 2^5 = 3^4 is a coprime solution with k = 5
  const auto r = verify_aux(AuxId::Terai4, {20, 0, 0, 4, 12});
  CHECK(r.solutions == V{{7, 2, 3, 5}});
  CHECK(aux_tuple_holds(AuxId::Terai4, {7, 2, 3, 5}));
  CHECK_FALSE(aux_tuple_holds(AuxId::Terai4, {7, 2, 3, 3}));
}

TEST_CASE("fhyz") {
  const auto r = verify_aux(AuxId::Fhyz, {50, 0, 12, 0, 0});
  CHECK(r.solutions == V{{3, 1, 1, 2}});
  CHECK(r.pass);
}

TEST_CASE("trivial-eq1") {
  const auto r = verify_aux(AuxId::TrivialEq1, {8, 50, 14, 0, 0});
  CHECK(r.pass);
  CHECK(r.unclassified.empty());
  CHECK(r.classes.size() == r.solutions.size());
  CHECK(std::find(r.solutions.begin(), r.solutions.end(), AuxTuple{2, 45, 1, 13, 2}) != r.solutions.end());
  CHECK(std::find(r.solutions.begin(), r.solutions.end(), AuxTuple{4, 4, 2, 3, 2}) != r.solutions.end());
}

TEST_CASE("classify_trivial") {
  CHECK(classify_trivial(2, 1, 7, 1, 1) != "");
  CHECK(classify_trivial(2, 1, 5, 3, 2) != "");
  CHECK(classify_trivial(4, 4, 2, 3, 2) != "");   // t = 4^2/4
  CHECK(classify_trivial(6, 9, 2, 3, 2) != "");   // t = 6^2/4
  CHECK(classify_trivial(2, 45, 1, 13, 2) != "");
  CHECK(classify_trivial(2, 7, 1, 1, 1) != "");
  CHECK(classify_trivial(4, 3, 1, 1, 1) == "");
  CHECK(classify_trivial(4, 4, 2, 2, 2) == "");
}

TEST_CASE("aux_tuple_holds") {
  CHECK(aux_tuple_holds(AuxId::Na53, {2, 3}));
  CHECK_FALSE(aux_tuple_holds(AuxId::Na53, {1, 1}));
  CHECK(aux_tuple_holds(AuxId::Le, {11, 5, 2, 3}));
  CHECK_FALSE(aux_tuple_holds(AuxId::Le, {11, 5, 2}));
  CHECK(aux_tuple_holds(AuxId::TrivialEq1, {2, 45, 1, 13, 2}));
  CHECK_FALSE(aux_tuple_holds(AuxId::TrivialEq1, {3, 1, 1, 1, 1}));
}
