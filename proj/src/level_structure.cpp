#include "leveldiv/level_structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace leveldiv {

Partition::Partition(int n, std::vector<Coalition> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 1 || n > Coalition::kMaxPlayers)
    throw std::invalid_argument("player count must be in 1..64");
  std::sort(blocks_.begin(), blocks_.end(),
            [](Coalition a, Coalition b) { return a.min_member() < b.min_member(); });
  const Coalition ground = Coalition::all(n);
  Coalition seen;
  for (const Coalition& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition blocks must be nonempty");
    if (!b.subset_of(ground))
      throw std::invalid_argument("partition block mentions a player outside the game");
    if (b.intersects(seen)) throw std::invalid_argument("partition blocks must be disjoint");
    seen = seen.unite(b);
  }
  if (seen != ground) throw std::invalid_argument("partition blocks must cover all players");
  block_of_player_.assign(static_cast<std::size_t>(n), -1);
  for (int bi = 0; bi < block_count(); ++bi)
    for (PlayerId p : blocks_[static_cast<std::size_t>(bi)].members())
      block_of_player_[static_cast<std::size_t>(p)] = bi;
}

Partition Partition::singletons(int n) {
  std::vector<Coalition> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) blocks.push_back(Coalition::single(p));
  return Partition(n, std::move(blocks));
}

Partition Partition::one_block(int n) { return Partition(n, {Coalition::all(n)}); }

int Partition::index_of_block_containing(PlayerId p) const {
  if (p < 0 || p >= n_) throw std::invalid_argument("player index out of range");
  return block_of_player_[static_cast<std::size_t>(p)];
}

Coalition Partition::block_containing(PlayerId p) const {
  return blocks_[static_cast<std::size_t>(index_of_block_containing(p))];
}

int Partition::index_of(Coalition b) const {
  if (b.empty()) return -1;
  int bi = block_of_player_[static_cast<std::size_t>(b.min_member())];
  return blocks_[static_cast<std::size_t>(bi)] == b ? bi : -1;
}

bool Partition::refines_into(const Partition& finer) const {
  if (finer.n_ != n_) return false;
  for (const Coalition& b : finer.blocks_)
    if (!b.subset_of(block_containing(b.min_member()))) return false;
  return true;
}

LevelStructure::LevelStructure(std::vector<Partition> levels) : levels_(std::move(levels)) {
  if (levels_.size() < 2)
    throw std::invalid_argument("a level structure needs at least the bottom and top partitions");
  n_ = levels_.front().player_count();
  for (const Partition& part : levels_)
    if (part.player_count() != n_)
      throw std::invalid_argument("all levels must partition the same player set");
  if (!(levels_.front() == Partition::singletons(n_)))
    throw std::invalid_argument("the bottom level must be the singleton partition");
  if (levels_.back().block_count() != 1)
    throw std::invalid_argument("the top level must be the one-block partition");
  for (std::size_t l = 1; l < levels_.size(); ++l) {
    if (!levels_[l].refines_into(levels_[l - 1]))
      throw std::invalid_argument("level " + std::to_string(l) +
                                  " does not coarsen the level below it");
  }
  counts_.assign(levels_.size(), {});
  for (std::size_t l = 1; l < levels_.size(); ++l) {
    counts_[l].assign(static_cast<std::size_t>(n_), 0);
    std::vector<int> per_block(static_cast<std::size_t>(levels_[l].block_count()), 0);
    for (const Coalition& sub : levels_[l - 1].blocks())
      ++per_block[static_cast<std::size_t>(
          levels_[l].index_of_block_containing(sub.min_member()))];
    for (int p = 0; p < n_; ++p)
      counts_[l][static_cast<std::size_t>(p)] =
          per_block[static_cast<std::size_t>(levels_[l].index_of_block_containing(p))];
  }
}

LevelStructure LevelStructure::trivial(int n) {
  return LevelStructure({Partition::singletons(n), Partition::one_block(n)});
}

LevelStructure LevelStructure::from_intermediate(int n, std::vector<Partition> intermediate) {
  std::vector<Partition> levels;
  levels.reserve(intermediate.size() + 2);
  levels.push_back(Partition::singletons(n));
  for (Partition& part : intermediate) levels.push_back(std::move(part));
  levels.push_back(Partition::one_block(n));
  return LevelStructure(std::move(levels));
}

const Partition& LevelStructure::level(int l) const {
  if (l < 0 || l >= level_count()) throw std::invalid_argument("level index out of range");
  return levels_[static_cast<std::size_t>(l)];
}

Coalition LevelStructure::block_of(int l, PlayerId p) const {
  return level(l).block_containing(p);
}

int LevelStructure::block_index_of(int l, PlayerId p) const {
  return level(l).index_of_block_containing(p);
}

std::vector<Coalition> LevelStructure::subordinates(int l, Coalition block) const {
  if (l < 1 || l > k() + 1)
    throw std::invalid_argument("subordinates are defined for levels 1..k+1");
  if (level(l).index_of(block) < 0)
    throw std::invalid_argument("coalition " + block.to_string() + " is not a block of level " +
                                std::to_string(l));
  std::vector<Coalition> out;
  for (const Coalition& sub : level(l - 1).blocks())
    if (sub.subset_of(block)) out.push_back(sub);
  return out;
}

int LevelStructure::subordinate_count(int l, PlayerId p) const {
  if (l < 1 || l > k() + 1)
    throw std::invalid_argument("subordinate counts are defined for levels 1..k+1");
  if (p < 0 || p >= n_) throw std::invalid_argument("player index out of range");
  return counts_[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)];
}

LevelStructure LevelStructure::truncate(int l) const {
  if (l < 0 || l > k()) throw std::invalid_argument("truncation level must be in 0..k");
  const Partition& base = level(l);
  const int m = base.block_count();
  std::vector<Partition> out_levels;
  out_levels.reserve(static_cast<std::size_t>(level_count() - l));
  out_levels.push_back(Partition::singletons(m));
  for (int j = l + 1; j < level_count(); ++j) {
    // Group base blocks by which block of C_j they sit inside.
    std::vector<Coalition> meta_blocks(
        static_cast<std::size_t>(level(j).block_count()));
    for (int bi = 0; bi < m; ++bi) {
      int parent = level(j).index_of_block_containing(base.block(bi).min_member());
      meta_blocks[static_cast<std::size_t>(parent)] =
          meta_blocks[static_cast<std::size_t>(parent)].with(bi);
    }
    std::vector<Coalition> nonempty;
    for (const Coalition& b : meta_blocks)
      if (!b.empty()) nonempty.push_back(b);
    out_levels.emplace_back(m, std::move(nonempty));
  }
  return LevelStructure(std::move(out_levels));
}

}  // namespace leveldiv
