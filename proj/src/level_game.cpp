#include "leveldiv/level_game.hpp"

#include <limits>
#include <stdexcept>

namespace leveldiv {

LevelGame::LevelGame(CharacteristicFunction v, LevelStructure structure)
    : v_(std::move(v)), structure_(std::move(structure)) {
  if (v_.player_count() != structure_.player_count())
    throw std::invalid_argument("worth function and level structure disagree on player count");
}

Coalition union_containing(const LevelGame& game, int l, PlayerId p) {
  return game.structure().block_of(l, p);
}

std::vector<Coalition> direct_subordinates(const LevelGame& game, int l, Coalition block) {
  return game.structure().subordinates(l, block);
}

std::int64_t egalitarian_denominator(const LevelGame& game, PlayerId p, int l0, int l1) {
  const int top = game.k() + 1;
  if (l0 < 1 || l1 < l0 || l1 > top)
    throw std::invalid_argument("level range must satisfy 1 <= l0 <= l1 <= k+1");
  std::int64_t product = 1;
  for (int l = l0; l <= l1; ++l) {
    const std::int64_t factor = game.structure().subordinate_count(l, p);
    if (product > std::numeric_limits<std::int64_t>::max() / factor)
      throw std::overflow_error("denominator overflows");
    product *= factor;
  }
  return product;
}

Coalition QuotientGame::flatten(Coalition meta) const {
  Coalition out;
  for (int bi : meta.members()) out = out.unite(meta_players.at(static_cast<std::size_t>(bi)));
  return out;
}

QuotientGame quotient_game(const LevelGame& game, int l) {
  if (l < 0 || l > game.k())
    throw std::invalid_argument("quotient level must be in 0..k");
  const Partition& part = game.structure().level(l);
  const int m = part.block_count();
  if (m > CharacteristicFunction::kMaxCompletePlayers)
    throw std::invalid_argument("quotient game supports at most 20 blocks");
  std::vector<Coalition> metas = part.blocks();
  auto flatten = [&metas](std::uint64_t meta_mask) {
    Coalition out;
    for (int bi : Coalition(meta_mask).members())
      out = out.unite(metas[static_cast<std::size_t>(bi)]);
    return out;
  };
  if (game.v().is_complete()) {
    std::vector<double> table(std::size_t{1} << m);
    for (std::uint64_t meta = 1; meta < table.size(); ++meta)
      table[meta] = game.v().worth(flatten(meta));
    return QuotientGame{l, std::move(metas), CharacteristicFunction::complete(m, std::move(table))};
  }
  std::map<std::uint64_t, double> entries;
  for (std::uint64_t meta = 1; meta < (std::uint64_t{1} << m); ++meta) {
    Coalition s = flatten(meta);
    if (game.v().has(s)) entries[meta] = game.v().worth(s);
  }
  return QuotientGame{l, std::move(metas), CharacteristicFunction::partial(m, std::move(entries))};
}

LevelGame truncated_game(const LevelGame& game, int l) {
  QuotientGame q = quotient_game(game, l);
  return LevelGame(std::move(q.v), game.structure().truncate(l));
}

LevelGame add(const LevelGame& a, const LevelGame& b) {
  if (!(a.structure() == b.structure()))
    throw std::invalid_argument("cannot add games with different level structures");
  return LevelGame(add(a.v(), b.v()), a.structure());
}

LevelGame scale(const LevelGame& game, double c) {
  return LevelGame(scale(game.v(), c), game.structure());
}

}  // namespace leveldiv
