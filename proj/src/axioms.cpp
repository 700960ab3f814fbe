#include "leveldiv/axioms.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

#include "leveldiv/predicates.hpp"

namespace leveldiv {

namespace {

ValueFn fn_of(ValueId id) {
  return [id](const LevelGame& game) { return compute(id, game); };
}

void require_complete(const LevelGame& game) {
  if (!game.v().is_complete())
    throw std::invalid_argument("axiom checks need a complete characteristic function");
}

void add_witness(AxiomReport& report, const LevelGame& game, std::string subject, double lhs,
                 double rhs, double tol) {
  const double gap = std::abs(lhs - rhs);
  if (gap <= tol) return;
  report.passed = false;
  report.witnesses.push_back(AxiomWitness{game_digest(game), std::move(subject), lhs, rhs, gap});
}

double block_payoff(const Allocation& pay, Coalition block) {
  double sum = 0.0;
  for (PlayerId p : block.members()) sum += pay[static_cast<std::size_t>(p)];
  return sum;
}

std::uint64_t fnv1a(std::uint64_t hash, std::uint64_t word) {
  for (int byte = 0; byte < 8; ++byte) {
    hash ^= (word >> (8 * byte)) & 0xff;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace

std::string axiom_tag(AxiomId id) {
  switch (id) {
    case AxiomId::kEfficiency: return "eff";
    case AxiomId::kAdditivity: return "add";
    case AxiomId::kSymmetryAmongUnions: return "sym_unions";
    case AxiomId::kNullifyingPlayer: return "nullifying";
    case AxiomId::kDummifyingLevelNullifying: return "dummi_level_null";
    case AxiomId::kDummifyingUnionsForPlayer: return "dummi_unions_player";
    case AxiomId::kDummifyingPlayer: return "dummifying_player";
    case AxiomId::kWeakSymmetryAmongUnions: return "weak_sym_unions";
  }
  throw std::invalid_argument("unknown axiom id");
}

AxiomId parse_axiom_tag(const std::string& tag) {
  std::string low = tag;
  for (char& c : low) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (AxiomId id : kAllAxioms)
    if (low == axiom_tag(id)) return id;
  throw std::invalid_argument("unknown axiom '" + tag + "'");
}

std::string game_digest(const LevelGame& game) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, static_cast<std::uint64_t>(game.player_count()));
  for (const Partition& part : game.structure().levels())
    for (const Coalition& b : part.blocks()) h = fnv1a(h, b.mask());
  for (const Coalition& s : game.v().defined_coalitions()) {
    h = fnv1a(h, s.mask());
    std::uint64_t bits;
    const double w = game.v().worth(s);
    static_assert(sizeof(bits) == sizeof(w));
    std::memcpy(&bits, &w, sizeof(bits));
    h = fnv1a(h, bits);
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "n=%d k=%d h=%016llx", game.player_count(), game.k(),
                static_cast<unsigned long long>(h));
  return buf;
}

AxiomReport check_efficiency(const ValueFn& fn, const std::string& label, const LevelGame& game,
                             double tol) {
  AxiomReport report{AxiomId::kEfficiency, label, true, {}};
  const Allocation pay = fn(game);
  double total = 0.0;
  for (double x : pay) total += x;
  add_witness(report, game, "grand coalition", total, game.v().worth(game.grand_coalition()), tol);
  return report;
}

AxiomReport check_additivity(const ValueFn& fn, const std::string& label, const LevelGame& a,
                             const LevelGame& b, double tol) {
  AxiomReport report{AxiomId::kAdditivity, label, true, {}};
  const LevelGame sum = add(a, b);
  const Allocation pay_sum = fn(sum);
  const Allocation pay_a = fn(a);
  const Allocation pay_b = fn(b);
  for (int p = 0; p < a.player_count(); ++p) {
    const auto idx = static_cast<std::size_t>(p);
    add_witness(report, sum, "player " + std::to_string(p), pay_sum[idx], pay_a[idx] + pay_b[idx],
                tol);
  }
  return report;
}

AxiomReport check_symmetry_among_unions(const ValueFn& fn, const std::string& label,
                                        const LevelGame& game, double tol, bool weak) {
  require_complete(game);
  AxiomReport report{weak ? AxiomId::kWeakSymmetryAmongUnions : AxiomId::kSymmetryAmongUnions,
                     label, true, {}};
  if (weak) {
    for (int p = 0; p < game.player_count(); ++p)
      if (game.v().worth(Coalition::single(p)) != 0.0) return report;  // vacuous
  }
  const Allocation pay = fn(game);
  for (int l = 0; l <= game.k(); ++l) {
    const QuotientGame q = quotient_game(game, l);
    const Partition& part = game.structure().level(l);
    const Partition& above = game.structure().level(l + 1);
    for (int bi = 0; bi < part.block_count(); ++bi) {
      for (int bj = bi + 1; bj < part.block_count(); ++bj) {
        const Coalition ci = part.block(bi);
        const Coalition cj = part.block(bj);
        if (!(above.index_of_block_containing(ci.min_member()) ==
              above.index_of_block_containing(cj.min_member())))
          continue;
        if (!is_indistinguishable(q.v, bi, bj)) continue;
        add_witness(report, game,
                    "level " + std::to_string(l) + " unions " + ci.to_string() + " and " +
                        cj.to_string(),
                    block_payoff(pay, ci), block_payoff(pay, cj), tol);
      }
    }
  }
  return report;
}

AxiomReport check_nullifying_player(const ValueFn& fn, const std::string& label,
                                    const LevelGame& game, double tol) {
  require_complete(game);
  AxiomReport report{AxiomId::kNullifyingPlayer, label, true, {}};
  const Allocation pay = fn(game);
  for (int p = 0; p < game.player_count(); ++p) {
    if (!is_nullifying(game.v(), p)) continue;
    add_witness(report, game, "nullifying player " + std::to_string(p),
                pay[static_cast<std::size_t>(p)], 0.0, tol);
  }
  return report;
}

AxiomReport check_dummifying_level_nullifying(const ValueFn& fn, const std::string& label,
                                              const LevelGame& game, double tol) {
  require_complete(game);
  AxiomReport report{AxiomId::kDummifyingLevelNullifying, label, true, {}};
  const Allocation pay = fn(game);
  const int k = game.k();
  const QuotientGame top = quotient_game(game, k);
  for (int p = 0; p < game.player_count(); ++p) {
    const Coalition home = game.structure().block_of(k, p);
    const RestrictedGame inside = restrict_game(game.v(), home);
    int local = -1;
    for (std::size_t idx = 0; idx < inside.players.size(); ++idx)
      if (inside.players[idx] == p) local = static_cast<int>(idx);
    if (!is_nullifying(inside.v, local)) continue;
    if (!is_dummifying(top.v, game.structure().block_index_of(k, p))) continue;
    add_witness(report, game,
                "player " + std::to_string(p) + " (nullifying inside " + home.to_string() + ")",
                pay[static_cast<std::size_t>(p)], 0.0, tol);
  }
  return report;
}

AxiomReport check_dummifying_unions_for_player(const ValueFn& fn, const std::string& label,
                                               const LevelGame& game, double tol) {
  require_complete(game);
  AxiomReport report{AxiomId::kDummifyingUnionsForPlayer, label, true, {}};
  const Allocation pay = fn(game);
  std::vector<QuotientGame> quotients;
  for (int l = 0; l <= game.k(); ++l) quotients.push_back(quotient_game(game, l));
  for (int p = 0; p < game.player_count(); ++p) {
    bool premise = true;
    for (int l = 0; l <= game.k() && premise; ++l)
      premise = is_dummifying(quotients[static_cast<std::size_t>(l)].v,
                              game.structure().block_index_of(l, p));
    if (!premise) continue;
    add_witness(report, game, "player " + std::to_string(p) + " (dummifying at every level)",
                pay[static_cast<std::size_t>(p)], game.v().worth(Coalition::single(p)), tol);
  }
  return report;
}

AxiomReport check_dummifying_player(const ValueFn& fn, const std::string& label,
                                    const LevelGame& game, double tol) {
  require_complete(game);
  AxiomReport report{AxiomId::kDummifyingPlayer, label, true, {}};
  const Allocation pay = fn(game);
  for (int p = 0; p < game.player_count(); ++p) {
    if (!is_dummifying(game.v(), p)) continue;
    add_witness(report, game, "dummifying player " + std::to_string(p),
                pay[static_cast<std::size_t>(p)], game.v().worth(Coalition::single(p)), tol);
  }
  return report;
}

AxiomReport check_efficiency(ValueId id, const LevelGame& game, double tol) {
  return check_efficiency(fn_of(id), value_name(id), game, tol);
}

AxiomReport check_additivity(ValueId id, const LevelGame& a, const LevelGame& b, double tol) {
  return check_additivity(fn_of(id), value_name(id), a, b, tol);
}

AxiomReport check_symmetry_among_unions(ValueId id, const LevelGame& game, double tol,
                                        bool weak) {
  return check_symmetry_among_unions(fn_of(id), value_name(id), game, tol, weak);
}

AxiomReport check_nullifying_player(ValueId id, const LevelGame& game, double tol) {
  return check_nullifying_player(fn_of(id), value_name(id), game, tol);
}

AxiomReport check_dummifying_level_nullifying(ValueId id, const LevelGame& game, double tol) {
  return check_dummifying_level_nullifying(fn_of(id), value_name(id), game, tol);
}

AxiomReport check_dummifying_unions_for_player(ValueId id, const LevelGame& game, double tol) {
  return check_dummifying_unions_for_player(fn_of(id), value_name(id), game, tol);
}

AxiomReport check_dummifying_player(ValueId id, const LevelGame& game, double tol) {
  return check_dummifying_player(fn_of(id), value_name(id), game, tol);
}

AxiomReport run_check(AxiomId axiom, ValueId value, const LevelGame& game,
                      const std::optional<LevelGame>& second, double tol) {
  const ValueFn fn = fn_of(value);
  const std::string label = value_name(value);
  switch (axiom) {
    case AxiomId::kEfficiency:
      return check_efficiency(fn, label, game, tol);
    case AxiomId::kAdditivity:
      return check_additivity(fn, label, game, second ? *second : game, tol);
    case AxiomId::kSymmetryAmongUnions:
      return check_symmetry_among_unions(fn, label, game, tol, false);
    case AxiomId::kWeakSymmetryAmongUnions:
      return check_symmetry_among_unions(fn, label, game, tol, true);
    case AxiomId::kNullifyingPlayer:
      return check_nullifying_player(fn, label, game, tol);
    case AxiomId::kDummifyingLevelNullifying:
      return check_dummifying_level_nullifying(fn, label, game, tol);
    case AxiomId::kDummifyingUnionsForPlayer:
      return check_dummifying_unions_for_player(fn, label, game, tol);
    case AxiomId::kDummifyingPlayer:
      return check_dummifying_player(fn, label, game, tol);
  }
  throw std::invalid_argument("unknown axiom id");
}

std::vector<AxiomId> characterizing_axioms(ValueId id) {
  switch (id) {
    case ValueId::kEd:
      return {AxiomId::kEfficiency, AxiomId::kAdditivity, AxiomId::kNullifyingPlayer};
    case ValueId::kEsd:
      return {AxiomId::kEfficiency, AxiomId::kAdditivity, AxiomId::kDummifyingPlayer};
    case ValueId::kLed:
      return {AxiomId::kEfficiency, AxiomId::kAdditivity, AxiomId::kSymmetryAmongUnions,
              AxiomId::kWeakSymmetryAmongUnions, AxiomId::kNullifyingPlayer};
    case ValueId::kLesd1:
      return {AxiomId::kEfficiency, AxiomId::kAdditivity, AxiomId::kSymmetryAmongUnions,
              AxiomId::kWeakSymmetryAmongUnions, AxiomId::kDummifyingLevelNullifying};
    case ValueId::kLesd2:
      return {AxiomId::kEfficiency, AxiomId::kAdditivity, AxiomId::kSymmetryAmongUnions,
              AxiomId::kWeakSymmetryAmongUnions, AxiomId::kDummifyingUnionsForPlayer};
    case ValueId::kLesd3:
      return {AxiomId::kEfficiency, AxiomId::kAdditivity, AxiomId::kWeakSymmetryAmongUnions,
              AxiomId::kDummifyingPlayer};
  }
  throw std::invalid_argument("unknown value id");
}

}  // namespace leveldiv
