#include <limits>

#include "doctest.h"
#include "leveldiv/characteristic_function.hpp"

using namespace leveldiv;

namespace {

CharacteristicFunction three_player() {
  // v({0})=1 v({1})=2 v({0,1})=4 v({2})=0 v({0,2})=3 v({1,2})=5 v(N)=9
  return CharacteristicFunction::complete(3, {0, 1, 2, 4, 0, 3, 5, 9});
}

}  // namespace

TEST_CASE("complete function serves every coalition") {
  const CharacteristicFunction v = three_player();
  CHECK(v.player_count() == 3);
  CHECK(v.is_complete());
  CHECK(v.worth(Coalition()) == 0.0);
  CHECK(v.worth(Coalition::of({0, 1})) == 4.0);
  CHECK(v.worth(v.grand_coalition()) == 9.0);
  CHECK(v.defined_coalitions().size() == 7);
}

TEST_CASE("complete table is validated") {
  CHECK_THROWS_AS(CharacteristicFunction::complete(2, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(CharacteristicFunction::complete(2, {1, 1, 2, 3}), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(CharacteristicFunction::complete(2, {0, 1, inf, 3}), std::invalid_argument);
  CHECK_THROWS_AS(CharacteristicFunction::complete(21, std::vector<double>(1 << 21, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("partial function throws loudly on gaps") {
  const CharacteristicFunction v =
      CharacteristicFunction::partial(3, {{0b001, 1.0}, {0b111, 9.0}});
  CHECK_FALSE(v.is_complete());
  CHECK(v.worth(Coalition::single(0)) == 1.0);
  CHECK(v.worth(Coalition()) == 0.0);  // empty set is free even when absent
  CHECK(v.has(Coalition::all(3)));
  CHECK_FALSE(v.has(Coalition::of({0, 1})));
  try {
    v.worth(Coalition::of({0, 1}));
    FAIL("expected a MissingWorthError");
  } catch (const MissingWorthError& e) {
    CHECK(e.coalition() == Coalition::of({0, 1}));
    CHECK(e.player_count() == 3);
  }
}

TEST_CASE("partial empty-set entries: zero dropped, nonzero rejected") {
  const CharacteristicFunction v = CharacteristicFunction::partial(2, {{0, 0.0}, {0b11, 5.0}});
  CHECK(v.defined_coalitions().size() == 1);
  CHECK_THROWS_AS(CharacteristicFunction::partial(2, {{0, 1.0}}), std::invalid_argument);
}

TEST_CASE("adding and scaling worth functions") {
  const CharacteristicFunction v = three_player();
  const CharacteristicFunction sum = add(v, v);
  CHECK(sum.is_complete());
  CHECK(sum.worth(Coalition::of({1, 2})) == 10.0);
  const CharacteristicFunction half = scale(v, 0.5);
  CHECK(half.worth(v.grand_coalition()) == 4.5);

  const CharacteristicFunction p =
      CharacteristicFunction::partial(3, {{0b011, 1.0}, {0b111, 2.0}});
  const CharacteristicFunction mixed = add(v, p);
  CHECK_FALSE(mixed.is_complete());
  CHECK(mixed.worth(Coalition::of({0, 1})) == 5.0);
  CHECK_FALSE(mixed.has(Coalition::single(0)));
}
