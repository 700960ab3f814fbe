#pragma once

#include <cstdint>

#include "leveldiv/level_game.hpp"

namespace leveldiv {

// Small deterministic generator (splitmix64 core). std::mt19937_64 would do,
// but the standard distributions differ across library implementations and
// replayability from a seed is part of the contract here, so the bounded
// draws are hand-rolled too.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], both inclusive.
  std::int64_t pick(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::uint64_t state_;
};

// A nested structure over n players with exactly k intermediate levels,
// built top-down: each block splits into 1..4 sub-blocks per level.
LevelStructure random_structure(Rng& rng, int n, int k);

// Complete worth function with integer worths drawn uniformly from
// [worth_lo, worth_hi] for every nonempty coalition.
CharacteristicFunction random_worths(Rng& rng, int n, int worth_lo, int worth_hi);

// A complete random game: n uniform in [2, n_max], k uniform in [0, k_max],
// integer worths in [worth_lo, worth_hi]. Fully determined by the seed.
LevelGame random_level_game(std::uint64_t seed, int n_max, int k_max, int worth_lo, int worth_hi);

// Deterministic per-trial sub-seed, so each trial of a campaign or search is
// replayable on its own.
std::uint64_t trial_seed(std::uint64_t campaign_seed, int trial);

}  // namespace leveldiv
