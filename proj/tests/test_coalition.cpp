#include "doctest.h"
#include "leveldiv/coalition.hpp"

using namespace leveldiv;

TEST_CASE("coalition membership and algebra") {
  const Coalition s = Coalition::of({0, 2, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.min_member() == 0);
  CHECK(s.with(1).size() == 4);
  CHECK(s.without(0) == Coalition::of({2, 5}));
  CHECK(s.unite(Coalition::single(1)) == Coalition::of({0, 1, 2, 5}));
  CHECK(s.intersect(Coalition::of({2, 3})) == Coalition::single(2));
  CHECK(s.minus(Coalition::of({2, 3})) == Coalition::of({0, 5}));
  CHECK(Coalition::of({0, 2}).subset_of(s));
  CHECK_FALSE(s.subset_of(Coalition::of({0, 2})));
  CHECK(Coalition().empty());
  CHECK(Coalition().min_member() == -1);
  CHECK(Coalition::all(3) == Coalition::of({0, 1, 2}));
  CHECK(Coalition::all(64).size() == 64);
  CHECK_THROWS_AS(Coalition::single(64), std::invalid_argument);
  CHECK_THROWS_AS(Coalition::all(65), std::invalid_argument);
}

TEST_CASE("coalition rendering lists members ascending") {
  CHECK(Coalition::of({2, 0}).to_string() == "{0,2}");
  CHECK(Coalition().to_string() == "{}");
  const std::vector<PlayerId> members = Coalition::of({3, 1}).members();
  REQUIRE(members.size() == 2);
  CHECK(members[0] == 1);
  CHECK(members[1] == 3);
}

TEST_CASE("subset enumeration walks every subset once, ascending") {
  const Coalition g = Coalition::of({0, 2, 3});
  const std::vector<Coalition> subs = subsets_of(g);
  REQUIRE(subs.size() == 8);
  CHECK(subs.front().empty());
  CHECK(subs.back() == g);
  for (std::size_t i = 1; i < subs.size(); ++i) {
    CHECK(subs[i - 1].mask() < subs[i].mask());
    CHECK(subs[i].subset_of(g));
  }
}
