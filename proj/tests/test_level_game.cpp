#include "doctest.h"
#include "leveldiv/fee_model.hpp"
#include "leveldiv/level_game.hpp"

using namespace leveldiv;

namespace {

LevelGame parking() { return build_level_game(FeeSchedule{}, parking_topology()); }

}  // namespace

TEST_CASE("level game glues worths to a structure of the same size") {
  const LevelGame game = parking();
  CHECK(game.player_count() == 5);
  CHECK(game.k() == 2);
  CHECK(game.v().worth(game.grand_coalition()) == 216.0);
  CHECK_THROWS_AS(LevelGame(CharacteristicFunction::complete(2, {0, 1, 2, 4}),
                            LevelStructure::trivial(3)),
                  std::invalid_argument);
}

TEST_CASE("union lookups follow the chain of a player") {
  const LevelGame game = parking();
  CHECK(union_containing(game, 0, 3) == Coalition::single(3));
  CHECK(union_containing(game, 1, 3) == Coalition::of({3, 4}));
  CHECK(union_containing(game, 2, 3) == Coalition::of({2, 3, 4}));
  CHECK(union_containing(game, 3, 3) == Coalition::all(5));
  const std::vector<Coalition> subs = direct_subordinates(game, 3, Coalition::all(5));
  REQUIRE(subs.size() == 2);
  CHECK(subs[0] == Coalition::of({0, 1}));
}

TEST_CASE("egalitarian denominators multiply subordinate counts") {
  const LevelGame game = parking();
  // Player 4's chain: {45} has 2 singletons, {345} has 2 floors, N has 2 lifts.
  CHECK(egalitarian_denominator(game, 3, 1, 1) == 2);
  CHECK(egalitarian_denominator(game, 3, 1, 2) == 4);
  CHECK(egalitarian_denominator(game, 3, 1, 3) == 8);
  // Player 0's chain: {1} alone, {12} has 2 floors, N has 2 lifts.
  CHECK(egalitarian_denominator(game, 0, 1, 3) == 4);
  CHECK_THROWS_AS(egalitarian_denominator(game, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(egalitarian_denominator(game, 0, 2, 4), std::invalid_argument);
}

TEST_CASE("quotient games aggregate block worths") {
  const LevelGame game = parking();

  const QuotientGame floors = quotient_game(game, 1);
  REQUIRE(floors.meta_players.size() == 4);
  CHECK(floors.v.worth(Coalition::single(0)) == 114.0);
  CHECK(floors.v.worth(Coalition::single(1)) == 118.0);
  CHECK(floors.v.worth(Coalition::single(2)) == 114.0);
  CHECK(floors.v.worth(Coalition::single(3)) == 128.0);
  CHECK(floors.v.worth(Coalition::all(4)) == 216.0);
  CHECK(floors.flatten(Coalition::of({2, 3})) == Coalition::of({2, 3, 4}));

  const QuotientGame lifts = quotient_game(game, 2);
  REQUIRE(lifts.meta_players.size() == 2);
  CHECK(lifts.v.worth(Coalition::single(0)) == 128.0);
  CHECK(lifts.v.worth(Coalition::single(1)) == 138.0);
  CHECK(lifts.v.worth(Coalition::all(2)) == 216.0);

  // Level 0 is the identity quotient.
  const QuotientGame bottom = quotient_game(game, 0);
  CHECK(bottom.v == game.v());
}

TEST_CASE("partial games quotient to what resolves") {
  // Only the lift unions and N are defined.
  const CharacteristicFunction v = CharacteristicFunction::partial(
      5, {{0b00011, 128.0}, {0b11100, 138.0}, {0b11111, 216.0}});
  const LevelGame game(v, parking().structure());
  const QuotientGame lifts = quotient_game(game, 2);
  CHECK(lifts.v.worth(Coalition::single(0)) == 128.0);
  CHECK(lifts.v.worth(Coalition::all(2)) == 216.0);
  const QuotientGame floors = quotient_game(game, 1);
  CHECK_FALSE(floors.v.has(Coalition::single(0)));
}

TEST_CASE("truncated games pair quotient worths with the shrunk structure") {
  const LevelGame at_floors = truncated_game(parking(), 1);
  CHECK(at_floors.player_count() == 4);
  CHECK(at_floors.k() == 1);
  CHECK(at_floors.v().worth(Coalition::of({0, 1})) == 128.0);
  CHECK(at_floors.structure().level(1) ==
        Partition(4, {Coalition::of({0, 1}), Coalition::of({2, 3})}));
}

TEST_CASE("game addition demands one shared structure") {
  const LevelGame game = parking();
  const LevelGame doubled = add(game, game);
  CHECK(doubled.v().worth(game.grand_coalition()) == 432.0);
  CHECK(scale(game, 0.5).v().worth(game.grand_coalition()) == 108.0);
  const LevelGame trivial(game.v(), LevelStructure::trivial(5));
  CHECK_THROWS_AS(add(game, trivial), std::invalid_argument);
}
