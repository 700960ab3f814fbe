#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "leveldiv/coalition.hpp"

namespace leveldiv {

// Thrown when a partial characteristic function is asked for a coalition it
// does not define. Carries the offending coalition so callers at the I/O
// boundary can re-render it with external labels.
class MissingWorthError : public std::runtime_error {
 public:
  MissingWorthError(Coalition coalition, int n)
      : std::runtime_error("worth undefined for coalition " + coalition.to_string()),
        coalition_(coalition),
        n_(n) {}

  Coalition coalition() const { return coalition_; }
  int player_count() const { return n_; }

 private:
  Coalition coalition_;
  int n_;
};

// Worth function v of a TU game on players {0, ..., n-1}. v(empty) = 0 always.
// Complete functions hold a dense table indexed by coalition mask; partial
// ones hold only the coalitions a file or caller provided, and looking up an
// absent coalition throws (never a silent zero). Immutable once built.
class CharacteristicFunction {
 public:
  // Dense tables get big fast; complete games beyond this are refused.
  static constexpr int kMaxCompletePlayers = 20;

  // `table[mask]` is the worth of the coalition with that mask; table[0] must
  // be exactly 0 and table.size() must be 1 << n.
  static CharacteristicFunction complete(int n, std::vector<double> table);

  // `entries` maps coalition masks to worths. An entry for the empty
  // coalition is rejected unless it is exactly 0 (and is then dropped).
  static CharacteristicFunction partial(int n, std::map<std::uint64_t, double> entries);

  int player_count() const { return n_; }
  bool is_complete() const { return complete_; }
  Coalition grand_coalition() const { return Coalition::all(n_); }

  double worth(Coalition s) const;
  bool has(Coalition s) const;

  // Defined coalitions in increasing mask order, empty set excluded.
  std::vector<Coalition> defined_coalitions() const;

  friend bool operator==(const CharacteristicFunction& a, const CharacteristicFunction& b);

 private:
  CharacteristicFunction(int n, bool complete) : n_(n), complete_(complete) {}

  int n_ = 0;
  bool complete_ = false;
  std::vector<double> table_;                  // complete storage
  std::map<std::uint64_t, double> entries_;    // partial storage
};

// Pointwise sum. Complete + complete (same n) is complete; otherwise the
// result is partial on the intersection of the defined coalitions.
CharacteristicFunction add(const CharacteristicFunction& v, const CharacteristicFunction& w);

// Pointwise scaling by c, preserving completeness.
CharacteristicFunction scale(const CharacteristicFunction& v, double c);

}  // namespace leveldiv
