#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leveldiv/values.hpp"

namespace leveldiv {

enum class AxiomId {
  kEfficiency,
  kAdditivity,
  kSymmetryAmongUnions,
  kNullifyingPlayer,
  kDummifyingLevelNullifying,
  kDummifyingUnionsForPlayer,
  kDummifyingPlayer,
  kWeakSymmetryAmongUnions,
};

inline constexpr AxiomId kAllAxioms[] = {
    AxiomId::kEfficiency,
    AxiomId::kAdditivity,
    AxiomId::kSymmetryAmongUnions,
    AxiomId::kNullifyingPlayer,
    AxiomId::kDummifyingLevelNullifying,
    AxiomId::kDummifyingUnionsForPlayer,
    AxiomId::kDummifyingPlayer,
    AxiomId::kWeakSymmetryAmongUnions,
};

std::string axiom_tag(AxiomId id);
AxiomId parse_axiom_tag(const std::string& tag);

// Short deterministic fingerprint of a game (player count, levels, worths);
// lets a witness name the game it came from.
std::string game_digest(const LevelGame& game);

struct AxiomWitness {
  std::string game;     // digest of the offending game
  std::string subject;  // offending player / union pair / level, human-readable
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;     // |lhs - rhs|, always > tol
};

struct AxiomReport {
  AxiomId axiom;
  std::string value;  // label of the checked allocation rule
  bool passed = true;
  std::vector<AxiomWitness> witnesses;  // nonempty exactly when !passed
};

// Allocation rule under test. Taking a function (rather than only a ValueId)
// lets tests drive the checkers with deliberately broken rules.
using ValueFn = std::function<Allocation(const LevelGame&)>;

// Payoffs sum to v(N) within tol.
AxiomReport check_efficiency(const ValueFn& fn, const std::string& label, const LevelGame& game,
                             double tol);
AxiomReport check_efficiency(ValueId id, const LevelGame& game, double tol);

// fn(a + b) == fn(a) + fn(b) componentwise within tol; a and b must share
// their level structure.
AxiomReport check_additivity(const ValueFn& fn, const std::string& label, const LevelGame& a,
                             const LevelGame& b, double tol);
AxiomReport check_additivity(ValueId id, const LevelGame& a, const LevelGame& b, double tol);

// For every level l in 0..k and every pair of distinct C_l blocks sharing
// their parent block at level l+1: if the two blocks are indistinguishable
// players of the induced game on C_l, their payoff sums agree within tol.
// The weak variant only constrains games whose singleton worths are all
// exactly 0 and passes vacuously otherwise. Needs a complete game.
AxiomReport check_symmetry_among_unions(const ValueFn& fn, const std::string& label,
                                        const LevelGame& game, double tol, bool weak = false);
AxiomReport check_symmetry_among_unions(ValueId id, const LevelGame& game, double tol,
                                        bool weak = false);

// A nullifying player's payoff is 0 within tol. Needs a complete game.
AxiomReport check_nullifying_player(const ValueFn& fn, const std::string& label,
                                    const LevelGame& game, double tol);
AxiomReport check_nullifying_player(ValueId id, const LevelGame& game, double tol);

// A player that is nullifying within its own top-level block, while that
// block is dummifying in the induced game on C_k, gets 0 within tol.
AxiomReport check_dummifying_level_nullifying(const ValueFn& fn, const std::string& label,
                                              const LevelGame& game, double tol);
AxiomReport check_dummifying_level_nullifying(ValueId id, const LevelGame& game, double tol);

// A player whose block is dummifying in the induced game at every level
// 0..k gets exactly its singleton worth, within tol.
AxiomReport check_dummifying_unions_for_player(const ValueFn& fn, const std::string& label,
                                               const LevelGame& game, double tol);
AxiomReport check_dummifying_unions_for_player(ValueId id, const LevelGame& game, double tol);

// A dummifying player gets its singleton worth within tol.
AxiomReport check_dummifying_player(const ValueFn& fn, const std::string& label,
                                    const LevelGame& game, double tol);
AxiomReport check_dummifying_player(ValueId id, const LevelGame& game, double tol);

// Uniform entry point. `second` feeds the additivity check (when absent the
// game is paired with itself); the other axioms ignore it.
AxiomReport run_check(AxiomId axiom, ValueId value, const LevelGame& game,
                      const std::optional<LevelGame>& second, double tol);

// The axiom set a rule provably satisfies on every game; used as the
// expected-pass gate by the verifier.
std::vector<AxiomId> characterizing_axioms(ValueId id);

}  // namespace leveldiv
