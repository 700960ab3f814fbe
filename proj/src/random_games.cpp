#include "leveldiv/random_games.hpp"

#include <algorithm>
#include <stdexcept>

namespace leveldiv {

LevelStructure random_structure(Rng& rng, int n, int k) {
  if (n < 1 || n > CharacteristicFunction::kMaxCompletePlayers)
    throw std::invalid_argument("random structures support 1..20 players");
  if (k < 0) throw std::invalid_argument("level count must be nonnegative");
  std::vector<Partition> levels(static_cast<std::size_t>(k) + 2,
                                Partition::one_block(n));
  levels[static_cast<std::size_t>(k) + 1] = Partition::one_block(n);
  for (int l = k; l >= 1; --l) {
    std::vector<Coalition> blocks;
    for (const Coalition& parent : levels[static_cast<std::size_t>(l) + 1].blocks()) {
      const int pieces =
          static_cast<int>(rng.pick(1, std::min<std::int64_t>(4, parent.size())));
      std::vector<Coalition> buckets(static_cast<std::size_t>(pieces));
      for (PlayerId p : parent.members()) {
        auto idx = static_cast<std::size_t>(rng.pick(0, pieces - 1));
        buckets[idx] = buckets[idx].with(p);
      }
      for (const Coalition& b : buckets)
        if (!b.empty()) blocks.push_back(b);
    }
    levels[static_cast<std::size_t>(l)] = Partition(n, std::move(blocks));
  }
  levels[0] = Partition::singletons(n);
  return LevelStructure(std::move(levels));
}

CharacteristicFunction random_worths(Rng& rng, int n, int worth_lo, int worth_hi) {
  if (worth_lo > worth_hi) throw std::invalid_argument("empty worth range");
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t m = 1; m < table.size(); ++m)
    table[m] = static_cast<double>(rng.pick(worth_lo, worth_hi));
  return CharacteristicFunction::complete(n, std::move(table));
}

LevelGame random_level_game(std::uint64_t seed, int n_max, int k_max, int worth_lo, int worth_hi) {
  if (n_max < 2) throw std::invalid_argument("need at least two players");
  Rng rng(seed);
  const int n = static_cast<int>(rng.pick(2, n_max));
  const int k = static_cast<int>(rng.pick(0, k_max));
  LevelStructure structure = random_structure(rng, n, k);
  CharacteristicFunction v = random_worths(rng, n, worth_lo, worth_hi);
  return LevelGame(std::move(v), std::move(structure));
}

std::uint64_t trial_seed(std::uint64_t campaign_seed, int trial) {
  Rng mixer(campaign_seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1)));
  return mixer.next();
}

}  // namespace leveldiv
