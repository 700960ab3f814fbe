#pragma once

#include <cstdint>

#include "leveldiv/characteristic_function.hpp"
#include "leveldiv/level_structure.hpp"

namespace leveldiv {

// A TU game together with a level structure on its players.
class LevelGame {
 public:
  LevelGame(CharacteristicFunction v, LevelStructure structure);

  int player_count() const { return v_.player_count(); }
  int k() const { return structure_.k(); }
  const CharacteristicFunction& v() const { return v_; }
  const LevelStructure& structure() const { return structure_; }
  Coalition grand_coalition() const { return v_.grand_coalition(); }

 private:
  CharacteristicFunction v_;
  LevelStructure structure_;
};

// The block of C_l containing player p.
Coalition union_containing(const LevelGame& game, int l, PlayerId p);

// Blocks of C_{l-1} inside `block` of C_l (1 <= l <= k+1).
std::vector<Coalition> direct_subordinates(const LevelGame& game, int l, Coalition block);

// Product of subordinate counts along p's chain, over levels l0..l1 inclusive
// (1 <= l0 <= l1 <= k+1). Throws on int64 overflow rather than wrapping.
std::int64_t egalitarian_denominator(const LevelGame& game, PlayerId p, int l0, int l1);

// The game induced on the blocks of C_l: meta-player i is the i-th block of
// C_l in canonical order, and a meta-coalition is worth v of the union of its
// blocks. For a complete v the quotient is complete; for a partial v it is
// defined exactly on the meta-coalitions whose union v resolves.
struct QuotientGame {
  int level;
  std::vector<Coalition> meta_players;  // blocks of C_l, canonical order
  CharacteristicFunction v;             // over the meta-players

  // Union of the original-player blocks named by a meta-coalition.
  Coalition flatten(Coalition meta) const;
};

QuotientGame quotient_game(const LevelGame& game, int l);

// Quotient worths combined with the truncated structure: the level game the
// blocks of C_l play among themselves. Requires 0 <= l <= k.
LevelGame truncated_game(const LevelGame& game, int l);

// Pointwise game sum; both operands must share one structure.
LevelGame add(const LevelGame& a, const LevelGame& b);

LevelGame scale(const LevelGame& game, double c);

}  // namespace leveldiv
