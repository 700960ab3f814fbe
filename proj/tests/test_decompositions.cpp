#include <cmath>

#include "doctest.h"
#include "leveldiv/decompositions.hpp"
#include "leveldiv/fee_model.hpp"
#include "leveldiv/values.hpp"

using namespace leveldiv;

namespace {

LevelGame parking() { return build_level_game(FeeSchedule{}, parking_topology()); }

void check_close(const Allocation& got, const Allocation& want, double tol = 1e-9) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

Allocation plus(const Allocation& a, const Allocation& b) {
  Allocation out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

TEST_CASE("basis games spike on one coalition") {
  const CharacteristicFunction e = basis_game(3, Coalition::of({0, 2}), 2.5);
  CHECK(e.worth(Coalition::of({0, 2})) == 2.5);
  CHECK(e.worth(Coalition::single(0)) == 0.0);
  CHECK(e.worth(Coalition::all(3)) == 0.0);
  CHECK_THROWS_AS(basis_game(3, Coalition(), 1.0), std::invalid_argument);
}

TEST_CASE("the additive part sums singleton worths") {
  const CharacteristicFunction va = additive_part(parking().v());
  CHECK(va.worth(Coalition::single(1)) == 118.0);
  CHECK(va.worth(Coalition::of({0, 1})) == 232.0);
  CHECK(va.worth(Coalition::all(5)) == 582.0);
}

TEST_CASE("splitting against the top blocks reconstructs the game") {
  const LevelGame game = parking();
  const TopBlockSplit split = top_block_split(game);
  CHECK(split.block_part.worth(Coalition::of({0, 1})) == 128.0);
  CHECK(split.block_part.worth(Coalition::of({0, 1, 2})) == 128.0);
  CHECK(split.block_part.worth(Coalition::single(0)) == 0.0);
  CHECK(split.block_part.worth(Coalition::all(5)) == 266.0);
  CHECK(split.surplus_part.worth(Coalition::all(5)) == -50.0);
  for (Coalition s : subsets_of(Coalition::all(5)))
    CHECK(split.block_part.worth(s) + split.surplus_part.worth(s) == game.v().worth(s));
}

TEST_CASE("the first rule splits across the top-block pieces") {
  const LevelGame game = parking();
  const TopBlockSplit split = top_block_split(game);
  const LevelGame blocks(split.block_part, game.structure());
  const LevelGame rest(split.surplus_part, game.structure());

  // On the pure block game each player gets its top block's worth divided by
  // its equal-division denominator up to the block: 128/2, 128/2, 138/2,
  // 138/4, 138/4.
  check_close(lesd1_value(blocks), {64, 64, 69, 34.5, 34.5});
  check_close(plus(lesd1_value(blocks), lesd1_value(rest)), lesd1_value(game));
}

TEST_CASE("level surpluses plus residual rebuild the game exactly") {
  const LevelGame game = parking();
  const LevelSurplusSplit split = level_surplus_split(game);
  REQUIRE(split.level_parts.size() == 2);
  CHECK(split.additive.worth(Coalition::all(5)) == 582.0);
  CHECK(split.level_parts[0].worth(Coalition::of({3, 4})) == -108.0);
  CHECK(split.level_parts[0].worth(Coalition::all(5)) == -108.0);
  CHECK(split.level_parts[1].worth(Coalition::of({0, 1})) == -104.0);
  CHECK(split.level_parts[1].worth(Coalition::all(5)) == -208.0);
  for (Coalition s : subsets_of(Coalition::all(5))) {
    double total = split.additive.worth(s) + split.residual.worth(s);
    for (const CharacteristicFunction& part : split.level_parts) total += part.worth(s);
    CHECK(total == game.v().worth(s));
  }
}

TEST_CASE("the second rule pays each level surplus egalitarian-down") {
  const LevelGame game = parking();
  const LevelSurplusSplit split = level_surplus_split(game);

  const LevelGame floors(split.level_parts[0], game.structure());
  check_close(lesd2_value(floors), {0, 0, 0, -54, -54});
  const LevelGame lifts(split.level_parts[1], game.structure());
  check_close(lesd2_value(lifts), {-52, -52, -52, -26, -26});

  Allocation rebuilt = plus(lesd2_value(LevelGame(split.additive, game.structure())),
                            lesd2_value(LevelGame(split.residual, game.structure())));
  rebuilt = plus(rebuilt, lesd2_value(floors));
  rebuilt = plus(rebuilt, lesd2_value(lifts));
  check_close(rebuilt, lesd2_value(game));
}

TEST_CASE("the third rule is singleton worths plus led of the centered game") {
  const LevelGame game = parking();
  const AdditiveSplit split = additive_split(game);
  CHECK(split.centered.worth(Coalition::all(5)) == -366.0);
  for (PlayerId p = 0; p < 5; ++p) CHECK(split.centered.worth(Coalition::single(p)) == 0.0);

  const Allocation led_centered = led_value(LevelGame(split.centered, game.structure()));
  Allocation expected(5);
  for (PlayerId p = 0; p < 5; ++p)
    expected[static_cast<std::size_t>(p)] =
        game.v().worth(Coalition::single(p)) + led_centered[static_cast<std::size_t>(p)];
  check_close(lesd3_value(game), expected);
}

TEST_CASE("decompositions need complete games") {
  const CharacteristicFunction partial = CharacteristicFunction::partial(3, {{0b111, 4.0}});
  const LevelGame game(partial, LevelStructure::trivial(3));
  CHECK_THROWS_AS(top_block_split(game), std::invalid_argument);
  CHECK_THROWS_AS(level_surplus_split(game), std::invalid_argument);
  CHECK_THROWS_AS(additive_split(game), std::invalid_argument);
  CHECK_THROWS_AS(additive_part(partial), std::invalid_argument);
}
