#include "doctest.h"
#include "leveldiv/fee_model.hpp"
#include "leveldiv/predicates.hpp"

using namespace leveldiv;

namespace {

const CharacteristicFunction& parking_v() {
  static const CharacteristicFunction v =
      build_level_game(FeeSchedule{}, parking_topology()).v();
  return v;
}

}  // namespace

TEST_CASE("indistinguishable players agree on every completion") {
  const CharacteristicFunction& v = parking_v();
  // Owners 4 and 5 share a floor, so swapping them never changes a fee.
  CHECK(is_indistinguishable(v, 3, 4));
  // Owners 1 and 3 pay the same alone but split on {owner 2}: 128 vs 182.
  CHECK(v.worth(Coalition::single(0)) == v.worth(Coalition::single(2)));
  CHECK_FALSE(is_indistinguishable(v, 0, 2));
  CHECK(is_indistinguishable(v, 4, 3));  // symmetric in its arguments
}

TEST_CASE("nullifying means every containing coalition collapses to zero") {
  // Player 1 zeroes out everything it joins.
  const CharacteristicFunction v =
      CharacteristicFunction::complete(3, {0, 4, 0, 0, 2, 7, 0, 0});
  CHECK(is_nullifying(v, 1));
  CHECK_FALSE(is_nullifying(v, 0));
  CHECK_FALSE(is_nullifying(v, 2));
}

TEST_CASE("dummifying means every containing coalition is its singleton sum") {
  // v({0})=1 v({1})=2 v({2})=5, and any coalition holding player 2 is additive.
  const CharacteristicFunction v =
      CharacteristicFunction::complete(3, {0, 1, 2, 9, 5, 6, 7, 8});
  CHECK(is_dummifying(v, 2));
  CHECK_FALSE(is_dummifying(v, 0));  // v({0,1}) = 9 != 3
  // Exact equality, not tolerance: a 1e-12 nudge breaks the predicate.
  const CharacteristicFunction nudged =
      CharacteristicFunction::complete(3, {0, 1, 2, 9, 5, 6 + 1e-12, 7, 8});
  CHECK_FALSE(is_dummifying(nudged, 2));
}

TEST_CASE("predicates insist on complete games") {
  const CharacteristicFunction v = CharacteristicFunction::partial(2, {{0b11, 3.0}});
  CHECK_THROWS_AS(is_indistinguishable(v, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(is_nullifying(v, 0), std::invalid_argument);
  CHECK_THROWS_AS(is_dummifying(v, 0), std::invalid_argument);
}

TEST_CASE("restriction renumbers players but keeps worths") {
  const RestrictedGame r = restrict_game(parking_v(), Coalition::of({2, 3, 4}));
  REQUIRE(r.players == std::vector<PlayerId>{2, 3, 4});
  CHECK(r.v.player_count() == 3);
  CHECK(r.v.worth(Coalition::single(0)) == 114.0);  // old player 2
  CHECK(r.v.worth(Coalition::of({1, 2})) == 128.0);  // old {3,4}
  CHECK(r.v.worth(Coalition::all(3)) == 138.0);
}

TEST_CASE("restricting a partial game needs every inner subset") {
  const CharacteristicFunction v =
      CharacteristicFunction::partial(3, {{0b011, 4.0}, {0b111, 9.0}});
  CHECK_THROWS_AS(restrict_game(v, Coalition::of({0, 1})), MissingWorthError);
}
