#pragma once

#include <string>
#include <vector>

#include "leveldiv/level_game.hpp"
#include "leveldiv/rational.hpp"

namespace leveldiv {

using Allocation = std::vector<double>;

enum class ValueId { kEd, kEsd, kLed, kLesd1, kLesd2, kLesd3 };

inline constexpr ValueId kAllValues[] = {ValueId::kEd,    ValueId::kEsd,   ValueId::kLed,
                                         ValueId::kLesd1, ValueId::kLesd2, ValueId::kLesd3};

// Canonical lowercase tag ("ed", "lesd1", ...) and display name ("LESD1").
std::string value_tag(ValueId id);
std::string value_name(ValueId id);
// Parses a tag, case-insensitively; throws std::invalid_argument on junk.
ValueId parse_value_tag(const std::string& tag);

// Write D_l(i) for the number of direct subordinates of the block of C_l
// containing i, and P_l(i) for the product D_1(i) * ... * D_l(i).
//
//   ED_i    = v(N) / n
//   ESD_i   = v(i) + (v(N) - sum_j v(j)) / n
//   LED_i   = v(N) / P_{k+1}(i)
//   LESD1_i = v(C_k(i)) / P_k(i)
//           + (v(N) - sum_{C in C_k} v(C)) / P_{k+1}(i)
//   LESD2_i = v(i) + sum_{l=1}^{k+1} (v(C_l(i)) - sum of v over the direct
//             subordinates of C_l(i)) / P_l(i)
//   LESD3_i = v(i) + (v(N) - sum_j v(j)) / P_{k+1}(i)
//
// ED and ESD ignore the level structure. Every rule is efficient: payoffs
// sum to v(N). Sums run in ascending block/player order; a partial v that
// lacks a needed coalition makes the lookup throw MissingWorthError.

Allocation ed_value(const CharacteristicFunction& v);
Allocation esd_value(const CharacteristicFunction& v);
Allocation led_value(const LevelGame& game);
Allocation lesd1_value(const LevelGame& game);
Allocation lesd2_value(const LevelGame& game);
Allocation lesd3_value(const LevelGame& game);

Allocation compute(ValueId id, const LevelGame& game);

// Same formulas over exact rationals. Worths must convert exactly (integers
// and small dyadics do); anything else throws std::overflow_error.
std::vector<Rational> compute_exact(ValueId id, const LevelGame& game);

// The coalitions a rule reads, deduplicated, in increasing mask order. A game
// defining worths for all of these can be evaluated by that rule.
std::vector<Coalition> required_coalitions(ValueId id, const LevelGame& game);

}  // namespace leveldiv
