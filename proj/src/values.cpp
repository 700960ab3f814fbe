#include "leveldiv/values.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace leveldiv {

namespace {

// The formulas are identical in double and in Rational; WorthFn adapts the
// lookup (plain read vs exact conversion) and Num carries the arithmetic.

template <typename Num, typename WorthFn>
std::vector<Num> ed_impl(const CharacteristicFunction& v, WorthFn worth) {
  const int n = v.player_count();
  const Num share = worth(v.grand_coalition()) / Num(n);
  return std::vector<Num>(static_cast<std::size_t>(n), share);
}

template <typename Num, typename WorthFn>
std::vector<Num> esd_impl(const CharacteristicFunction& v, WorthFn worth) {
  const int n = v.player_count();
  Num singleton_sum(0);
  for (int p = 0; p < n; ++p) singleton_sum += worth(Coalition::single(p));
  const Num surplus_share = (worth(v.grand_coalition()) - singleton_sum) / Num(n);
  std::vector<Num> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) out.push_back(worth(Coalition::single(p)) + surplus_share);
  return out;
}

// P_{l0..l1}(p) as Num, factors in ascending level order.
template <typename Num>
Num denom(const LevelGame& game, PlayerId p, int l0, int l1) {
  Num product(1);
  for (int l = l0; l <= l1; ++l) product = product * Num(game.structure().subordinate_count(l, p));
  return product;
}

template <typename Num, typename WorthFn>
std::vector<Num> led_impl(const LevelGame& game, WorthFn worth) {
  const Num total = worth(game.grand_coalition());
  std::vector<Num> out;
  out.reserve(static_cast<std::size_t>(game.player_count()));
  for (int p = 0; p < game.player_count(); ++p)
    out.push_back(total / denom<Num>(game, p, 1, game.k() + 1));
  return out;
}

template <typename Num, typename WorthFn>
std::vector<Num> lesd1_impl(const LevelGame& game, WorthFn worth) {
  const int k = game.k();
  Num top_block_sum(0);
  for (const Coalition& c : game.structure().level(k).blocks()) top_block_sum += worth(c);
  const Num remainder = worth(game.grand_coalition()) - top_block_sum;
  std::vector<Num> out;
  out.reserve(static_cast<std::size_t>(game.player_count()));
  for (int p = 0; p < game.player_count(); ++p) {
    // P_k(p) is the empty product when k = 0.
    Num own_share = worth(game.structure().block_of(k, p));
    if (k >= 1) own_share = own_share / denom<Num>(game, p, 1, k);
    out.push_back(own_share + remainder / denom<Num>(game, p, 1, k + 1));
  }
  return out;
}

template <typename Num, typename WorthFn>
std::vector<Num> lesd2_impl(const LevelGame& game, WorthFn worth) {
  const int k = game.k();
  std::vector<Num> out;
  out.reserve(static_cast<std::size_t>(game.player_count()));
  for (int p = 0; p < game.player_count(); ++p) {
    Num pay = worth(Coalition::single(p));
    for (int l = 1; l <= k + 1; ++l) {
      const Coalition block = game.structure().block_of(l, p);
      Num sub_sum(0);
      for (const Coalition& sub : game.structure().subordinates(l, block)) sub_sum += worth(sub);
      pay += (worth(block) - sub_sum) / denom<Num>(game, p, 1, l);
    }
    out.push_back(pay);
  }
  return out;
}

template <typename Num, typename WorthFn>
std::vector<Num> lesd3_impl(const LevelGame& game, WorthFn worth) {
  Num singleton_sum(0);
  for (int p = 0; p < game.player_count(); ++p) singleton_sum += worth(Coalition::single(p));
  const Num surplus = worth(game.grand_coalition()) - singleton_sum;
  std::vector<Num> out;
  out.reserve(static_cast<std::size_t>(game.player_count()));
  for (int p = 0; p < game.player_count(); ++p)
    out.push_back(worth(Coalition::single(p)) + surplus / denom<Num>(game, p, 1, game.k() + 1));
  return out;
}

template <typename Num, typename WorthFn>
std::vector<Num> dispatch(ValueId id, const LevelGame& game, WorthFn worth) {
  switch (id) {
    case ValueId::kEd:
      return ed_impl<Num>(game.v(), worth);
    case ValueId::kEsd:
      return esd_impl<Num>(game.v(), worth);
    case ValueId::kLed:
      return led_impl<Num>(game, worth);
    case ValueId::kLesd1:
      return lesd1_impl<Num>(game, worth);
    case ValueId::kLesd2:
      return lesd2_impl<Num>(game, worth);
    case ValueId::kLesd3:
      return lesd3_impl<Num>(game, worth);
  }
  throw std::invalid_argument("unknown value id");
}

}  // namespace

std::string value_tag(ValueId id) {
  switch (id) {
    case ValueId::kEd: return "ed";
    case ValueId::kEsd: return "esd";
    case ValueId::kLed: return "led";
    case ValueId::kLesd1: return "lesd1";
    case ValueId::kLesd2: return "lesd2";
    case ValueId::kLesd3: return "lesd3";
  }
  throw std::invalid_argument("unknown value id");
}

std::string value_name(ValueId id) {
  std::string tag = value_tag(id);
  for (char& c : tag) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return tag;
}

ValueId parse_value_tag(const std::string& tag) {
  std::string low = tag;
  for (char& c : low) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (ValueId id : kAllValues)
    if (low == value_tag(id)) return id;
  throw std::invalid_argument("unknown value '" + tag +
                              "' (expected one of ed, esd, led, lesd1, lesd2, lesd3)");
}

Allocation ed_value(const CharacteristicFunction& v) {
  return ed_impl<double>(v, [&v](Coalition s) { return v.worth(s); });
}

Allocation esd_value(const CharacteristicFunction& v) {
  return esd_impl<double>(v, [&v](Coalition s) { return v.worth(s); });
}

Allocation led_value(const LevelGame& game) {
  return led_impl<double>(game, [&game](Coalition s) { return game.v().worth(s); });
}

Allocation lesd1_value(const LevelGame& game) {
  return lesd1_impl<double>(game, [&game](Coalition s) { return game.v().worth(s); });
}

Allocation lesd2_value(const LevelGame& game) {
  return lesd2_impl<double>(game, [&game](Coalition s) { return game.v().worth(s); });
}

Allocation lesd3_value(const LevelGame& game) {
  return lesd3_impl<double>(game, [&game](Coalition s) { return game.v().worth(s); });
}

Allocation compute(ValueId id, const LevelGame& game) {
  return dispatch<double>(id, game, [&game](Coalition s) { return game.v().worth(s); });
}

std::vector<Rational> compute_exact(ValueId id, const LevelGame& game) {
  return dispatch<Rational>(
      id, game, [&game](Coalition s) { return Rational::from_double(game.v().worth(s)); });
}

std::vector<Coalition> required_coalitions(ValueId id, const LevelGame& game) {
  std::set<Coalition> needed;
  needed.insert(game.grand_coalition());
  const int n = game.player_count();
  switch (id) {
    case ValueId::kEd:
    case ValueId::kLed:
      break;
    case ValueId::kEsd:
    case ValueId::kLesd3:
      for (int p = 0; p < n; ++p) needed.insert(Coalition::single(p));
      break;
    case ValueId::kLesd1:
      for (const Coalition& c : game.structure().level(game.k()).blocks()) needed.insert(c);
      break;
    case ValueId::kLesd2:
      for (int l = 0; l <= game.k(); ++l)
        for (const Coalition& c : game.structure().level(l).blocks()) needed.insert(c);
      break;
  }
  return std::vector<Coalition>(needed.begin(), needed.end());
}

}  // namespace leveldiv
