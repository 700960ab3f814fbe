#include "doctest.h"
#include "leveldiv/level_structure.hpp"

using namespace leveldiv;

namespace {

// Five owners, floors below lifts: C_1 = {1}{2}{3}{45}, C_2 = {12}{345}.
LevelStructure parking_structure() {
  return LevelStructure::from_intermediate(
      5, {Partition(5, {Coalition::single(0), Coalition::single(1), Coalition::single(2),
                        Coalition::of({3, 4})}),
          Partition(5, {Coalition::of({0, 1}), Coalition::of({2, 3, 4})})});
}

}  // namespace

TEST_CASE("partition canonicalizes block order and validates") {
  const Partition p(4, {Coalition::of({2, 3}), Coalition::of({0, 1})});
  CHECK(p.block(0) == Coalition::of({0, 1}));
  CHECK(p.block(1) == Coalition::of({2, 3}));
  CHECK(p.block_containing(3) == Coalition::of({2, 3}));
  CHECK(p.index_of_block_containing(1) == 0);
  CHECK(p.index_of(Coalition::of({2, 3})) == 1);
  CHECK(p.index_of(Coalition::of({1, 2})) == -1);

  CHECK_THROWS_AS(Partition(3, {Coalition::of({0, 1})}), std::invalid_argument);  // no cover
  CHECK_THROWS_AS(Partition(3, {Coalition::of({0, 1}), Coalition::of({1, 2})}),
                  std::invalid_argument);  // overlap
  CHECK_THROWS_AS(Partition(3, {Coalition::of({0, 1, 2}), Coalition()}),
                  std::invalid_argument);  // empty block
}

TEST_CASE("refinement order between partitions") {
  const Partition fine = Partition::singletons(4);
  const Partition mid(4, {Coalition::of({0, 1}), Coalition::of({2, 3})});
  CHECK(mid.refines_into(fine));
  CHECK(Partition::one_block(4).refines_into(mid));
  CHECK_FALSE(mid.refines_into(Partition::one_block(4)));
  CHECK(mid.refines_into(mid));
}

TEST_CASE("level structure shape and lookups") {
  const LevelStructure s = parking_structure();
  CHECK(s.player_count() == 5);
  CHECK(s.k() == 2);
  CHECK(s.level_count() == 4);
  CHECK(s.level(0) == Partition::singletons(5));
  CHECK(s.level(3) == Partition::one_block(5));
  CHECK(s.block_of(1, 4) == Coalition::of({3, 4}));
  CHECK(s.block_of(2, 4) == Coalition::of({2, 3, 4}));
  CHECK(s.block_index_of(2, 1) == 0);

  const std::vector<Coalition> subs = s.subordinates(2, Coalition::of({2, 3, 4}));
  REQUIRE(subs.size() == 2);
  CHECK(subs[0] == Coalition::single(2));
  CHECK(subs[1] == Coalition::of({3, 4}));
  CHECK(s.subordinate_count(1, 4) == 2);   // {4,5} holds two singletons
  CHECK(s.subordinate_count(2, 4) == 2);   // {3,4,5} holds {3} and {4,5}
  CHECK(s.subordinate_count(3, 4) == 2);   // N holds both lift blocks
  CHECK(s.subordinate_count(3, 0) == 2);
  CHECK_THROWS_AS(s.subordinates(2, Coalition::of({0, 2})), std::invalid_argument);
}

TEST_CASE("non-nested levels are rejected") {
  CHECK_THROWS_WITH_AS(
      LevelStructure::from_intermediate(
          3, {Partition(3, {Coalition::of({0, 1}), Coalition::single(2)}),
              Partition(3, {Coalition::single(0), Coalition::of({1, 2})})}),
      "level 2 does not coarsen the level below it", std::invalid_argument);
}

TEST_CASE("structures missing the boundary partitions are rejected") {
  CHECK_THROWS_AS(LevelStructure({Partition::singletons(3)}), std::invalid_argument);
  CHECK_THROWS_AS(
      LevelStructure({Partition(3, {Coalition::of({0, 1}), Coalition::single(2)}),
                      Partition::one_block(3)}),
      std::invalid_argument);  // bottom must be singletons
  CHECK_THROWS_AS(
      LevelStructure({Partition::singletons(3),
                      Partition(3, {Coalition::of({0, 1}), Coalition::single(2)})}),
      std::invalid_argument);  // top must be one block
}

TEST_CASE("trivial structure has no intermediate levels") {
  const LevelStructure s = LevelStructure::trivial(4);
  CHECK(s.k() == 0);
  CHECK(s.subordinate_count(1, 2) == 4);
  CHECK(s.block_of(1, 2) == Coalition::all(4));
}

TEST_CASE("adjacent duplicate levels are legal") {
  const Partition mid(4, {Coalition::of({0, 1}), Coalition::of({2, 3})});
  const LevelStructure s = LevelStructure::from_intermediate(4, {mid, mid});
  CHECK(s.k() == 2);
  CHECK(s.subordinate_count(2, 0) == 1);  // the duplicate layer adds nothing
  CHECK(s.subordinate_count(1, 0) == 2);
}

TEST_CASE("truncation turns blocks into players") {
  const LevelStructure s = parking_structure();

  const LevelStructure at_floors = s.truncate(1);
  CHECK(at_floors.player_count() == 4);  // the four floor blocks
  CHECK(at_floors.k() == 1);
  // Floor blocks {1},{2} sit in lift {12}; {3},{45} in lift {345}.
  CHECK(at_floors.level(1) ==
        Partition(4, {Coalition::of({0, 1}), Coalition::of({2, 3})}));

  const LevelStructure at_lifts = s.truncate(2);
  CHECK(at_lifts.player_count() == 2);
  CHECK(at_lifts.k() == 0);

  CHECK(s.truncate(0) == s);
}
