#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "leveldiv/game_file.hpp"
#include "leveldiv/random_games.hpp"
#include "leveldiv/values.hpp"

using namespace leveldiv;

TEST_CASE("the bundled parking file loads to the published game") {
  const LoadedGame loaded = load_game_text(bundled_example("parking"));
  CHECK(loaded.name == "parking");
  CHECK(loaded.labels == std::vector<std::string>{"1", "2", "3", "4", "5"});
  CHECK(loaded.game.k() == 2);
  REQUIRE(loaded.game.v().is_complete());
  CHECK(loaded.game.v().worth(Coalition::of({0, 1})) == 128.0);
  CHECK(loaded.game.v().worth(Coalition::all(5)) == 216.0);
  const Allocation led = led_value(loaded.game);
  CHECK(led[0] == doctest::Approx(54));
  CHECK(led[4] == doctest::Approx(27));
}

TEST_CASE("the bundled file is already in canonical form") {
  const std::string text = bundled_example("parking");
  CHECK(serialize(load_game_text(text)) == text);
}

TEST_CASE("a generator stanza reproduces the explicit bundled file byte for byte") {
  const std::string generated = R"(name parking
generator fee_model
schedule fixed 50 per_lift 50 per_floor 4 per_place 10
lift [1] [2]
lift [3] [4 5]
)";
  CHECK(serialize(load_game_text(generated)) == bundled_example("parking"));

  // The schedule line is optional; these are the defaults.
  const std::string defaults = R"(name parking
generator fee_model
lift [1] [2]
lift [3] [4 5]
)";
  CHECK(serialize(load_game_text(defaults)) == bundled_example("parking"));
}

TEST_CASE("random games survive a serialize/load round trip") {
  for (std::uint64_t seed : {3, 17, 91}) {
    const LevelGame game = random_level_game(seed, 6, 3, -10, 10);
    std::vector<std::string> labels;
    for (int p = 0; p < game.player_count(); ++p) labels.push_back(std::to_string(p + 1));
    const LoadedGame loaded{game, labels, "roundtrip", {}};
    const LoadedGame back = load_game_text(serialize(loaded));
    CHECK(back.game.v() == game.v());
    CHECK(back.game.structure() == game.structure());
    CHECK(back.name == "roundtrip");
  }
}

TEST_CASE("comments, blank lines and odd spacing are tolerated") {
  const std::string text =
      "# a tiny game\n"
      "\n"
      "players a b c   # three of them\n"
      "level [a b] [c]\n"
      "worth [ a ] 1\n"
      "worth [a b] 4.5\n"
      "worth [a b c] 9\n";
  const LoadedGame loaded = load_game_text(text);
  CHECK(loaded.labels == std::vector<std::string>{"a", "b", "c"});
  CHECK(loaded.game.k() == 1);
  CHECK_FALSE(loaded.game.v().is_complete());
  CHECK(loaded.game.v().worth(Coalition::of({0, 1})) == 4.5);
  CHECK(loaded.game.v().has(Coalition::single(0)));
  CHECK_FALSE(loaded.game.v().has(Coalition::single(1)));
}

TEST_CASE("files without level lines get the trivial structure") {
  const LoadedGame loaded = load_game_text("players x y\nworth [x y] 6\n");
  CHECK(loaded.game.k() == 0);
  CHECK(loaded.game.v().worth(Coalition::all(2)) == 6.0);
}

TEST_CASE("a full worth table becomes a complete game") {
  const std::string text =
      "players a b\n"
      "worth [a] 1\n"
      "worth [b] 2\n"
      "worth [a b] 5\n";
  CHECK(load_game_text(text).game.v().is_complete());
}

TEST_CASE("labels map back out through the loaded game") {
  const LoadedGame loaded = load_game_text(bundled_example("parking"));
  CHECK(loaded.label_index("4") == 3);
  CHECK(loaded.label_index("zz") == -1);
  CHECK(loaded.render_coalition(Coalition::of({3, 4})) == "[4 5]");
}

TEST_CASE("parse errors carry their line number") {
  try {
    parse_game_file("players a b\nworth [a b 3\n");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_game_file("junk a b\n"), ParseError);
  CHECK_THROWS_AS(parse_game_file("players a\nplayers b\n"), ParseError);
  CHECK_THROWS_AS(parse_game_file("worth [] 3\n"), ParseError);
  CHECK_THROWS_AS(parse_game_file("worth [a] x\n"), ParseError);
  CHECK_THROWS_AS(parse_game_file("name\n"), ParseError);
  CHECK_THROWS_AS(parse_game_file("generator magic\n"), ParseError);
  CHECK_THROWS_AS(parse_game_file("schedule fixed 1\n"), ParseError);
  CHECK_THROWS_AS(parse_game_file("generator fee_model\nschedule fixed\n"), ParseError);
}

TEST_CASE("realization rejects inconsistent files with label-based messages") {
  CHECK_THROWS_WITH_AS(load_game_text("players a a\n"), "duplicate player label 'a'",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(load_game_text("worth [a] 1\n"), "players line required",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(load_game_text("players a b\nlevel [a c] [b]\n"),
                       "unknown player label 'c' in level 1", std::invalid_argument);
  CHECK_THROWS_WITH_AS(load_game_text("players a b\nworth [a q] 1\n"),
                       "unknown player label 'q' in worth record", std::invalid_argument);
  CHECK_THROWS_WITH_AS(load_game_text("players a b\nworth [a] 1\nworth [a] 2\n"),
                       "duplicate worth record for coalition [a]", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      load_game_text("players a b c\nlevel [a b] [c]\nlevel [a] [b c]\nworth [a b c] 1\n"),
      "level 2 block [a] splits level 1 block [a b]", std::invalid_argument);
  CHECK_THROWS_AS(load_game_text("players a b\nlevel [a] [a b]\n"), std::invalid_argument);
}

TEST_CASE("generator files refuse explicit structure or worths") {
  CHECK_THROWS_WITH_AS(load_game_text("generator fee_model\nlift [a]\nworth [a] 1\n"),
                       "worth records are not allowed with a generator", std::invalid_argument);
  CHECK_THROWS_WITH_AS(load_game_text("generator fee_model\nlift [a]\nlevel [a]\n"),
                       "level lines are not allowed with a generator", std::invalid_argument);
  CHECK_THROWS_WITH_AS(load_game_text("players b a\ngenerator fee_model\nlift [a] [b]\n"),
                       "players line does not match the generator topology",
                       std::invalid_argument);
  // A players line that matches the canonical owner order is fine.
  const LoadedGame ok = load_game_text("players a b\ngenerator fee_model\nlift [a] [b]\n");
  CHECK(ok.labels == std::vector<std::string>{"a", "b"});
}

TEST_CASE("fractional worths round-trip through the shortest decimal form") {
  const std::string text =
      "players a b\n"
      "worth [a] 0.1\n"
      "worth [b] -2.718281828459045\n"
      "worth [a b] 28.25\n";
  const LoadedGame loaded = load_game_text(text);
  const LoadedGame reloaded = load_game_text(serialize(loaded));
  CHECK(reloaded.game.v().worth(Coalition::single(0)) == 0.1);
  CHECK(reloaded.game.v().worth(Coalition::single(1)) == -2.718281828459045);
  CHECK(reloaded.game.v() == loaded.game.v());
  CHECK(serialize(reloaded) == serialize(loaded));
}

TEST_CASE("unknown examples name the ones that exist") {
  CHECK(bundled_example_names() == std::vector<std::string>{"parking"});
  CHECK_THROWS_WITH_AS(bundled_example("lot"), "unknown example 'lot' (available: parking)",
                       std::invalid_argument);
}
