#include "leveldiv/predicates.hpp"

#include <stdexcept>
#include <string>

namespace leveldiv {

namespace {

void require_complete(const CharacteristicFunction& v, const char* what) {
  if (!v.is_complete())
    throw std::invalid_argument(std::string(what) + " needs a complete characteristic function");
}

void require_player(const CharacteristicFunction& v, PlayerId p) {
  if (p < 0 || p >= v.player_count()) throw std::invalid_argument("player index out of range");
}

}  // namespace

bool is_indistinguishable(const CharacteristicFunction& v, PlayerId i, PlayerId j) {
  require_complete(v, "indistinguishability");
  require_player(v, i);
  require_player(v, j);
  if (i == j) return true;
  const Coalition rest = v.grand_coalition().without(i).without(j);
  for (Coalition s : subsets_of(rest))
    if (v.worth(s.with(i)) != v.worth(s.with(j))) return false;
  return true;
}

bool is_nullifying(const CharacteristicFunction& v, PlayerId i) {
  require_complete(v, "the nullifying predicate");
  require_player(v, i);
  for (Coalition s : subsets_of(v.grand_coalition().without(i)))
    if (v.worth(s.with(i)) != 0.0) return false;
  return true;
}

bool is_dummifying(const CharacteristicFunction& v, PlayerId i) {
  require_complete(v, "the dummifying predicate");
  require_player(v, i);
  for (Coalition s : subsets_of(v.grand_coalition().without(i))) {
    const Coalition si = s.with(i);
    double singleton_sum = 0.0;
    for (PlayerId p : si.members()) singleton_sum += v.worth(Coalition::single(p));
    if (v.worth(si) != singleton_sum) return false;
  }
  return true;
}

RestrictedGame restrict_game(const CharacteristicFunction& v, Coalition s) {
  if (s.empty()) throw std::invalid_argument("cannot restrict to the empty coalition");
  if (!s.subset_of(v.grand_coalition()))
    throw std::invalid_argument("coalition mentions a player outside the game");
  const std::vector<PlayerId> players = s.members();
  const int m = static_cast<int>(players.size());
  if (m > CharacteristicFunction::kMaxCompletePlayers)
    throw std::invalid_argument("restriction supports at most 20 players");
  std::vector<double> table(std::size_t{1} << m);
  for (std::uint64_t sub = 1; sub < table.size(); ++sub) {
    Coalition original;
    for (int idx : Coalition(sub).members())
      original = original.with(players[static_cast<std::size_t>(idx)]);
    table[sub] = v.worth(original);  // throws MissingWorthError on a gap
  }
  return RestrictedGame{CharacteristicFunction::complete(m, std::move(table)), players};
}

}  // namespace leveldiv
