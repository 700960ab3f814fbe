#include "leveldiv/campaign.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace leveldiv {

namespace {

// Mirrors the draw order of random_level_game so the reported per-trial seed
// regenerates the same game through the public entry point, then keeps the
// stream going for the additivity partner.
struct TrialGames {
  LevelGame game;
  LevelGame partner;
};

TrialGames draw_trial_games(std::uint64_t seed, const CampaignOptions& options) {
  Rng rng(seed);
  const int n = static_cast<int>(rng.pick(2, options.n_max));
  const int k = static_cast<int>(rng.pick(0, options.k_max));
  LevelStructure structure = random_structure(rng, n, k);
  CharacteristicFunction v = random_worths(rng, n, options.worth_lo, options.worth_hi);
  CharacteristicFunction w = random_worths(rng, n, options.worth_lo, options.worth_hi);
  return TrialGames{LevelGame(std::move(v), structure), LevelGame(std::move(w), structure)};
}

}  // namespace

CampaignResult run_expected_pass_campaign(const CampaignOptions& options,
                                          const std::vector<ValueId>& values) {
  CampaignResult result;
  for (int trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t seed = trial_seed(options.seed, trial);
    const TrialGames games = draw_trial_games(seed, options);
    ++result.games_checked;
    for (ValueId value : values) {
      for (AxiomId axiom : characterizing_axioms(value)) {
        const AxiomReport report =
            run_check(axiom, value, games.game, std::optional<LevelGame>(games.partner),
                      options.tol);
        ++result.checks_run;
        if (!report.passed)
          result.failures.push_back(
              CampaignFailure{value, axiom, seed, report.witnesses.front()});
      }
    }
  }
  return result;
}

namespace {

std::size_t mask_of(Coalition s) { return static_cast<std::size_t>(s.mask()); }

// The boosters rewrite a dense worth table in place. Where a premise is an
// identity over sums, the inputs are redrawn small enough that every derived
// worth stays inside [worth_lo, worth_hi] for n <= 5.

void force_nullifying(std::vector<double>& table, int n, PlayerId p) {
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
    if (Coalition(m).contains(p)) table[m] = 0.0;
}

void redraw_singletons(std::vector<double>& table, int n, Rng& rng, int bound) {
  for (int p = 0; p < n; ++p)
    table[mask_of(Coalition::single(p))] = static_cast<double>(rng.pick(-bound, bound));
}

void force_dummifying(std::vector<double>& table, int n, PlayerId p) {
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    Coalition s(m);
    if (!s.contains(p)) continue;
    double sum = 0.0;
    for (PlayerId q : s.members()) sum += table[mask_of(Coalition::single(q))];
    table[m] = sum;
  }
}

void force_additive(std::vector<double>& table, int n) {
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    Coalition s(m);
    double sum = 0.0;
    for (PlayerId q : s.members()) sum += table[mask_of(Coalition::single(q))];
    table[m] = sum;
  }
}

// Copies the worths seen from block bj onto block bi at level l, making the
// two blocks indistinguishable in the induced game on C_l.
void symmetrize_pair(std::vector<double>& table, const LevelStructure& structure, int l, int bi,
                     int bj) {
  const Partition& part = structure.level(l);
  const Coalition ci = part.block(bi);
  const Coalition cj = part.block(bj);
  Coalition others;
  for (int b = 0; b < part.block_count(); ++b)
    if (b != bi && b != bj) others = others.with(b);
  for (Coalition meta : subsets_of(others)) {
    Coalition flat;
    for (int b : meta.members()) flat = flat.unite(part.block(b));
    table[mask_of(flat.unite(ci))] = table[mask_of(flat.unite(cj))];
  }
}

}  // namespace

LevelGame search_game(std::uint64_t seed, AxiomId axiom, const SearchOptions& options) {
  Rng rng(seed);
  const int n = static_cast<int>(rng.pick(2, options.n_max));
  const int k = static_cast<int>(rng.pick(0, options.k_max));
  LevelStructure structure = random_structure(rng, n, k);
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t m = 1; m < table.size(); ++m)
    table[m] = static_cast<double>(rng.pick(options.worth_lo, options.worth_hi));

  // Small enough that sums of up to n <= 5 terms stay inside the range.
  const int small = std::max(1, std::min(-options.worth_lo, options.worth_hi) / 5);

  switch (axiom) {
    case AxiomId::kEfficiency:
    case AxiomId::kAdditivity:
      break;
    case AxiomId::kNullifyingPlayer:
      force_nullifying(table, n, static_cast<PlayerId>(rng.pick(0, n - 1)));
      break;
    case AxiomId::kDummifyingPlayer:
      redraw_singletons(table, n, rng, small);
      force_dummifying(table, n, static_cast<PlayerId>(rng.pick(0, n - 1)));
      break;
    case AxiomId::kDummifyingUnionsForPlayer:
      redraw_singletons(table, n, rng, small);
      force_additive(table, n);
      break;
    case AxiomId::kDummifyingLevelNullifying: {
      const auto p = static_cast<PlayerId>(rng.pick(0, n - 1));
      const Partition& top = structure.level(structure.k());
      // Draw small block worths, zero p's coalitions inside its own block,
      // then rebuild the unions of top blocks as sums of block worths.
      for (const Coalition& b : top.blocks())
        table[mask_of(b)] = static_cast<double>(rng.pick(-small, small));
      const Coalition home = top.block_containing(p);
      for (Coalition s : subsets_of(home.without(p)))
        table[mask_of(s.with(p))] = 0.0;
      Coalition other_blocks;
      for (int b = 0; b < top.block_count(); ++b)
        if (!(top.block(b) == home)) other_blocks = other_blocks.with(b);
      for (Coalition meta : subsets_of(other_blocks)) {
        Coalition flat = home;
        double sum = table[mask_of(home)];
        for (int b : meta.members()) {
          flat = flat.unite(top.block(b));
          sum += table[mask_of(top.block(b))];
        }
        table[mask_of(flat)] = sum;
      }
      break;
    }
    case AxiomId::kSymmetryAmongUnions:
    case AxiomId::kWeakSymmetryAmongUnions: {
      if (axiom == AxiomId::kWeakSymmetryAmongUnions) {
        for (int p = 0; p < n; ++p) table[mask_of(Coalition::single(p))] = 0.0;
      }
      // Candidate pairs: same-parent distinct blocks at some level.
      std::vector<std::array<int, 3>> pairs;
      for (int l = 0; l <= structure.k(); ++l) {
        const Partition& part = structure.level(l);
        const Partition& above = structure.level(l + 1);
        for (int bi = 0; bi < part.block_count(); ++bi)
          for (int bj = bi + 1; bj < part.block_count(); ++bj)
            if (above.index_of_block_containing(part.block(bi).min_member()) ==
                above.index_of_block_containing(part.block(bj).min_member()))
              pairs.push_back({l, bi, bj});
      }
      if (!pairs.empty()) {
        const auto& [l, bi, bj] =
            pairs[static_cast<std::size_t>(rng.pick(0, static_cast<int>(pairs.size()) - 1))];
        symmetrize_pair(table, structure, l, bi, bj);
      }
      break;
    }
  }
  table[0] = 0.0;
  return LevelGame(CharacteristicFunction::complete(n, std::move(table)), std::move(structure));
}

std::optional<SearchHit> search_counterexample(ValueId value, AxiomId axiom,
                                               const SearchOptions& options) {
  for (int trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t seed = trial_seed(options.seed, trial);
    const LevelGame game = search_game(seed, axiom, options);
    const AxiomReport report = run_check(axiom, value, game, std::nullopt, options.tol);
    if (!report.passed) return SearchHit{trial, seed, report};
  }
  return std::nullopt;
}

}  // namespace leveldiv
