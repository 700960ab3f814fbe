#pragma once

#include "leveldiv/characteristic_function.hpp"

namespace leveldiv {

// The predicates below compare stored worths with exact equality; they are
// meant for games whose worths are exact in double (integers, dyadics). All
// of them need a complete worth function and throw otherwise.

// v(S + i) == v(S + j) for every S avoiding both i and j.
bool is_indistinguishable(const CharacteristicFunction& v, PlayerId i, PlayerId j);

// Every coalition containing i is worth exactly 0.
bool is_nullifying(const CharacteristicFunction& v, PlayerId i);

// Every coalition containing i is worth the sum of its members' singleton
// worths (summed in ascending player order).
bool is_dummifying(const CharacteristicFunction& v, PlayerId i);

// v restricted to the players of `s`, renumbered 0..|s|-1 in ascending order.
// players[new_index] gives the original player. Partial v must define every
// nonempty subset of s.
struct RestrictedGame {
  CharacteristicFunction v;
  std::vector<PlayerId> players;
};

RestrictedGame restrict_game(const CharacteristicFunction& v, Coalition s);

}  // namespace leveldiv
