#include "leveldiv/characteristic_function.hpp"

#include <cmath>

namespace leveldiv {

CharacteristicFunction CharacteristicFunction::complete(int n, std::vector<double> table) {
  if (n < 1 || n > kMaxCompletePlayers)
    throw std::invalid_argument("complete characteristic function supports 1..20 players");
  if (table.size() != (std::size_t{1} << n))
    throw std::invalid_argument("worth table size must be 2^n");
  if (table[0] != 0.0)
    throw std::invalid_argument("worth of the empty coalition must be 0");
  for (double w : table)
    if (!std::isfinite(w)) throw std::invalid_argument("worths must be finite");
  CharacteristicFunction v(n, true);
  v.table_ = std::move(table);
  return v;
}

CharacteristicFunction CharacteristicFunction::partial(int n,
                                                       std::map<std::uint64_t, double> entries) {
  if (n < 1 || n > Coalition::kMaxPlayers)
    throw std::invalid_argument("player count must be in 1..64");
  const std::uint64_t ground = Coalition::all(n).mask();
  if (auto it = entries.find(0); it != entries.end()) {
    if (it->second != 0.0)
      throw std::invalid_argument("worth of the empty coalition must be 0");
    entries.erase(it);
  }
  for (const auto& [mask, w] : entries) {
    if ((mask & ~ground) != 0)
      throw std::invalid_argument("coalition mentions a player outside the game");
    if (!std::isfinite(w)) throw std::invalid_argument("worths must be finite");
  }
  CharacteristicFunction v(n, false);
  v.entries_ = std::move(entries);
  return v;
}

double CharacteristicFunction::worth(Coalition s) const {
  if (s.empty()) return 0.0;
  if (!s.subset_of(grand_coalition()))
    throw std::invalid_argument("coalition mentions a player outside the game");
  if (complete_) return table_[s.mask()];
  auto it = entries_.find(s.mask());
  if (it == entries_.end()) throw MissingWorthError(s, n_);
  return it->second;
}

bool CharacteristicFunction::has(Coalition s) const {
  if (s.empty()) return true;
  if (!s.subset_of(grand_coalition())) return false;
  return complete_ || entries_.count(s.mask()) != 0;
}

std::vector<Coalition> CharacteristicFunction::defined_coalitions() const {
  std::vector<Coalition> out;
  if (complete_) {
    out.reserve(table_.size() - 1);
    for (std::uint64_t m = 1; m < table_.size(); ++m) out.push_back(Coalition(m));
  } else {
    out.reserve(entries_.size());
    for (const auto& [mask, _] : entries_) out.push_back(Coalition(mask));
  }
  return out;
}

bool operator==(const CharacteristicFunction& a, const CharacteristicFunction& b) {
  return a.n_ == b.n_ && a.complete_ == b.complete_ && a.table_ == b.table_ &&
         a.entries_ == b.entries_;
}

CharacteristicFunction add(const CharacteristicFunction& v, const CharacteristicFunction& w) {
  if (v.player_count() != w.player_count())
    throw std::invalid_argument("cannot add games with different player counts");
  const int n = v.player_count();
  if (v.is_complete() && w.is_complete()) {
    std::vector<double> table(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < table.size(); ++m) {
      Coalition s(m);
      table[m] = v.worth(s) + w.worth(s);
    }
    return CharacteristicFunction::complete(n, std::move(table));
  }
  std::map<std::uint64_t, double> entries;
  for (Coalition s : v.defined_coalitions())
    if (w.has(s)) entries[s.mask()] = v.worth(s) + w.worth(s);
  return CharacteristicFunction::partial(n, std::move(entries));
}

CharacteristicFunction scale(const CharacteristicFunction& v, double c) {
  const int n = v.player_count();
  if (v.is_complete()) {
    std::vector<double> table(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < table.size(); ++m) table[m] = c * v.worth(Coalition(m));
    table[0] = 0.0;
    return CharacteristicFunction::complete(n, std::move(table));
  }
  std::map<std::uint64_t, double> entries;
  for (Coalition s : v.defined_coalitions()) entries[s.mask()] = c * v.worth(s);
  return CharacteristicFunction::partial(n, std::move(entries));
}

}  // namespace leveldiv
