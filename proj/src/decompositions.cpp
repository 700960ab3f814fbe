#include "leveldiv/decompositions.hpp"

#include <stdexcept>

namespace leveldiv {

namespace {

void require_complete(const CharacteristicFunction& v) {
  if (!v.is_complete())
    throw std::invalid_argument("decompositions need a complete characteristic function");
}

// Builds a complete function from a per-mask worth rule.
template <typename Fn>
CharacteristicFunction build(int n, Fn worth_of) {
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t m = 1; m < table.size(); ++m) table[m] = worth_of(Coalition(m));
  return CharacteristicFunction::complete(n, std::move(table));
}

// Sum of v over the blocks of `part` contained in s, ascending block order.
double contained_block_sum(const CharacteristicFunction& v, const Partition& part, Coalition s) {
  double sum = 0.0;
  for (const Coalition& c : part.blocks())
    if (c.subset_of(s)) sum += v.worth(c);
  return sum;
}

}  // namespace

CharacteristicFunction basis_game(int n, Coalition t, double alpha) {
  if (t.empty()) throw std::invalid_argument("basis games are indexed by nonempty coalitions");
  if (!t.subset_of(Coalition::all(n)))
    throw std::invalid_argument("coalition mentions a player outside the game");
  return build(n, [t, alpha](Coalition s) { return s == t ? alpha : 0.0; });
}

CharacteristicFunction additive_part(const CharacteristicFunction& v) {
  require_complete(v);
  return build(v.player_count(), [&v](Coalition s) {
    double sum = 0.0;
    for (PlayerId p : s.members()) sum += v.worth(Coalition::single(p));
    return sum;
  });
}

TopBlockSplit top_block_split(const LevelGame& game) {
  require_complete(game.v());
  const Partition& top = game.structure().level(game.k());
  CharacteristicFunction block_part = build(game.player_count(), [&](Coalition s) {
    return contained_block_sum(game.v(), top, s);
  });
  CharacteristicFunction surplus_part = build(game.player_count(), [&](Coalition s) {
    return game.v().worth(s) - block_part.worth(s);
  });
  return TopBlockSplit{std::move(block_part), std::move(surplus_part)};
}

LevelSurplusSplit level_surplus_split(const LevelGame& game) {
  require_complete(game.v());
  const int n = game.player_count();
  const int k = game.k();
  CharacteristicFunction additive = additive_part(game.v());
  std::vector<CharacteristicFunction> level_parts;
  level_parts.reserve(static_cast<std::size_t>(k));
  for (int l = 1; l <= k; ++l) {
    const Partition& part = game.structure().level(l);
    const Partition& below = game.structure().level(l - 1);
    level_parts.push_back(build(n, [&](Coalition s) {
      double sum = 0.0;
      for (const Coalition& c : part.blocks())
        if (c.subset_of(s)) sum += game.v().worth(c) - contained_block_sum(game.v(), below, c);
      return sum;
    }));
  }
  CharacteristicFunction residual = build(n, [&](Coalition s) {
    double w = game.v().worth(s) - additive.worth(s);
    for (const CharacteristicFunction& part : level_parts) w -= part.worth(s);
    return w;
  });
  return LevelSurplusSplit{std::move(additive), std::move(level_parts), std::move(residual)};
}

AdditiveSplit additive_split(const LevelGame& game) {
  require_complete(game.v());
  CharacteristicFunction additive = additive_part(game.v());
  CharacteristicFunction centered = build(game.player_count(), [&](Coalition s) {
    return game.v().worth(s) - additive.worth(s);
  });
  return AdditiveSplit{std::move(additive), std::move(centered)};
}

}  // namespace leveldiv
