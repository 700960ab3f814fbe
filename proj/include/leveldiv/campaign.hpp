#pragma once

#include <optional>

#include "leveldiv/axioms.hpp"
#include "leveldiv/random_games.hpp"

namespace leveldiv {

// Batch verification: many seeded random games, each rule checked against the
// axiom set it is expected to satisfy everywhere.

struct CampaignOptions {
  std::uint64_t seed = 42;
  int trials = 1000;
  int n_max = 6;
  int k_max = 3;
  int worth_lo = -10;
  int worth_hi = 10;
  double tol = 1e-9;
};

struct CampaignFailure {
  ValueId value;
  AxiomId axiom;
  std::uint64_t seed;  // per-trial seed; random_level_game(seed, ...) rebuilds the game
  AxiomWitness witness;
};

struct CampaignResult {
  int games_checked = 0;
  int checks_run = 0;
  std::vector<CampaignFailure> failures;
  bool passed() const { return failures.empty(); }
};

CampaignResult run_expected_pass_campaign(const CampaignOptions& options,
                                          const std::vector<ValueId>& values);

// Counterexample search for a (rule, axiom) pair that is not expected to
// hold. Trials are seeded and bounded; each trial draws a random game and
// then nudges it so the axiom's premise can actually fire (copying worths
// across a same-parent block pair for the symmetry axioms, zeroing a player's
// coalitions for nullifying, rebuilding sum identities for the dummifying
// premises). All worths stay integers in the configured range.

struct SearchOptions {
  std::uint64_t seed = 2026;
  int trials = 10000;
  int n_max = 5;
  int k_max = 2;
  int worth_lo = -10;
  int worth_hi = 10;
  double tol = 1e-9;
};

struct SearchHit {
  int trial;
  std::uint64_t seed;  // per-trial seed; search_game(seed, axiom, options) rebuilds the game
  AxiomReport report;  // the failing report, witnesses included
};

// The game trial `seed` produces for a given axiom's search.
LevelGame search_game(std::uint64_t seed, AxiomId axiom, const SearchOptions& options);

std::optional<SearchHit> search_counterexample(ValueId value, AxiomId axiom,
                                               const SearchOptions& options);

}  // namespace leveldiv
