#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace leveldiv {

using PlayerId = int;

// A set of players encoded as a 64-bit mask; bit p set means player p is in.
// Player indices are 0-based throughout the library, mapped to external
// labels only at the I/O boundary.
class Coalition {
 public:
  static constexpr int kMaxPlayers = 64;

  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t mask) : mask_(mask) {}

  static Coalition single(PlayerId p) { return Coalition(bit(p)); }

  static Coalition of(std::initializer_list<PlayerId> players) {
    std::uint64_t m = 0;
    for (PlayerId p : players) m |= bit(p);
    return Coalition(m);
  }

  static Coalition of(const std::vector<PlayerId>& players) {
    std::uint64_t m = 0;
    for (PlayerId p : players) m |= bit(p);
    return Coalition(m);
  }

  // The grand coalition {0, ..., n-1}.
  static Coalition all(int n) {
    if (n < 0 || n > kMaxPlayers) throw std::invalid_argument("player count out of range");
    if (n == kMaxPlayers) return Coalition(~std::uint64_t{0});
    return Coalition((std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(PlayerId p) const { return (mask_ >> p) & 1; }
  constexpr bool subset_of(Coalition other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(Coalition other) const { return (mask_ & other.mask_) != 0; }

  constexpr Coalition with(PlayerId p) const { return Coalition(mask_ | bit(p)); }
  constexpr Coalition without(PlayerId p) const { return Coalition(mask_ & ~bit(p)); }
  constexpr Coalition unite(Coalition other) const { return Coalition(mask_ | other.mask_); }
  constexpr Coalition intersect(Coalition other) const { return Coalition(mask_ & other.mask_); }
  constexpr Coalition minus(Coalition other) const { return Coalition(mask_ & ~other.mask_); }

  // Smallest player index, or -1 when empty.
  constexpr PlayerId min_member() const {
    return mask_ == 0 ? -1 : std::countr_zero(mask_);
  }

  std::vector<PlayerId> members() const {
    std::vector<PlayerId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  // "{0,2,3}" with 0-based indices; diagnostics only.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (PlayerId p : members()) {
      if (!first) s += ',';
      s += std::to_string(p);
      first = false;
    }
    s += '}';
    return s;
  }

  friend constexpr bool operator==(Coalition a, Coalition b) { return a.mask_ == b.mask_; }
  friend constexpr bool operator!=(Coalition a, Coalition b) { return a.mask_ != b.mask_; }
  friend constexpr bool operator<(Coalition a, Coalition b) { return a.mask_ < b.mask_; }

 private:
  static constexpr std::uint64_t bit(PlayerId p) {
    if (p < 0 || p >= kMaxPlayers) throw std::invalid_argument("player index out of range");
    return std::uint64_t{1} << p;
  }

  std::uint64_t mask_ = 0;
};

// Enumerates all subsets of `ground`, empty set included, in increasing mask
// order. Callable as: for (Coalition s = {}; ; s = next_subset(s, ground)) ...
// but the vector form below is what most call sites want at small n.
inline std::vector<Coalition> subsets_of(Coalition ground) {
  std::vector<Coalition> out;
  const std::uint64_t g = ground.mask();
  out.reserve(std::size_t{1} << ground.size());
  std::uint64_t s = 0;
  do {
    out.push_back(Coalition(s));
    s = (s - g) & g;
  } while (s != 0);
  return out;
}

}  // namespace leveldiv
