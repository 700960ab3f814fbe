#pragma once

#include <vector>

#include "leveldiv/coalition.hpp"

namespace leveldiv {

// A partition of {0, ..., n-1} into nonempty disjoint blocks. Blocks are kept
// sorted by smallest member, so iteration order is deterministic regardless
// of the order they were supplied in.
class Partition {
 public:
  Partition(int n, std::vector<Coalition> blocks);

  static Partition singletons(int n);
  static Partition one_block(int n);

  int player_count() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Coalition>& blocks() const { return blocks_; }
  const Coalition& block(int index) const { return blocks_.at(static_cast<std::size_t>(index)); }

  int index_of_block_containing(PlayerId p) const;
  Coalition block_containing(PlayerId p) const;

  // Index of `b` among the blocks, or -1 when b is not a block here.
  int index_of(Coalition b) const;

  // True when every block of `finer` lies inside a single block of this
  // partition (this partition is equal to or coarser than `finer`).
  bool refines_into(const Partition& finer) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  int n_;
  std::vector<Coalition> blocks_;
  std::vector<int> block_of_player_;  // player index -> block index
};

// A chain of partitions C_0, ..., C_{k+1} of the same player set, each block
// of C_l a union of blocks of C_{l-1}. C_0 is the singleton partition and
// C_{k+1} = {N}; the k partitions in between are the genuine levels (k = 0
// means no intermediate structure at all). Adjacent duplicates are legal.
class LevelStructure {
 public:
  explicit LevelStructure(std::vector<Partition> levels);

  // Just C_0 and {N}: the trivial structure, k = 0.
  static LevelStructure trivial(int n);

  // Wraps the given intermediate partitions with C_0 below and {N} on top.
  static LevelStructure from_intermediate(int n, std::vector<Partition> intermediate);

  int player_count() const { return n_; }
  // Number of intermediate levels.
  int k() const { return static_cast<int>(levels_.size()) - 2; }
  // Total number of partitions, k + 2.
  int level_count() const { return static_cast<int>(levels_.size()); }

  const Partition& level(int l) const;
  const std::vector<Partition>& levels() const { return levels_; }

  // The block of C_l containing player p.
  Coalition block_of(int l, PlayerId p) const;
  int block_index_of(int l, PlayerId p) const;

  // Blocks of C_{l-1} lying inside `block` of C_l, in canonical order.
  // Requires 1 <= l <= k + 1 and `block` an actual member of C_l.
  std::vector<Coalition> subordinates(int l, Coalition block) const;

  // |subordinates(l, block containing p)|, precomputed. Requires 1 <= l <= k+1.
  int subordinate_count(int l, PlayerId p) const;

  // The structure seen from level l: blocks of C_l become the players, and
  // the partitions above l collapse onto them. Requires 0 <= l <= k; the
  // result has k - l intermediate levels.
  LevelStructure truncate(int l) const;

  friend bool operator==(const LevelStructure& a, const LevelStructure& b) {
    return a.levels_ == b.levels_;
  }

 private:
  int n_;
  std::vector<Partition> levels_;
  // counts_[l][p] = number of C_{l-1} blocks inside the C_l block of p, for
  // l in 1..k+1 (row 0 unused).
  std::vector<std::vector<int>> counts_;
};

}  // namespace leveldiv
