#pragma once

#include "leveldiv/level_game.hpp"

namespace leveldiv {

// The game worth alpha on exactly the coalition t and 0 elsewhere.
CharacteristicFunction basis_game(int n, Coalition t, double alpha);

// v^a(S) = sum of singleton worths over S: the additive game under v.
CharacteristicFunction additive_part(const CharacteristicFunction& v);

// Splits v against the top intermediate partition C_k:
//   block_part(S)  = sum of v(C) over C_k blocks C inside S
//   surplus_part   = v - block_part
// The parts reconstruct v exactly and LESD1 treats them independently
// (block_part carries the per-block shares, surplus_part the remainder).
struct TopBlockSplit {
  CharacteristicFunction block_part;
  CharacteristicFunction surplus_part;
};

TopBlockSplit top_block_split(const LevelGame& game);

// Splits v into an additive part, one surplus game per intermediate level,
// and a residual:
//   additive        = v^a
//   level_parts[l-1](S) = sum over C_l blocks C inside S of
//                         (v(C) - sum of v over C's direct subordinates)
//   residual        = v - additive - sum of level_parts
// Reconstruction is exact by construction; LESD2 splits across the parts,
// paying u_l(C_l(i)) / P_l(i) out of level part l and the top remainder out
// of the residual.
struct LevelSurplusSplit {
  CharacteristicFunction additive;
  std::vector<CharacteristicFunction> level_parts;  // one per level 1..k
  CharacteristicFunction residual;
};

LevelSurplusSplit level_surplus_split(const LevelGame& game);

// Splits v into its additive part and the zero-normalized rest:
//   centered = v - v^a, so centered(i) = 0 for every player.
// LESD3 of v equals singleton worths plus LED of the centered game.
struct AdditiveSplit {
  CharacteristicFunction additive;
  CharacteristicFunction centered;
};

AdditiveSplit additive_split(const LevelGame& game);

}  // namespace leveldiv
