// leveldiv: egalitarian allocations for TU games carrying a level structure.
//
//   leveldiv compute --game parking.game --values all
//   leveldiv verify --game parking.game
//   leveldiv verify --random --trials 1000 --seed 42
//   leveldiv verify --value lesd3 --axiom sym_unions --search
//   leveldiv example parking | leveldiv compute --values led
//   leveldiv random --seed 7

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "leveldiv/axioms.hpp"
#include "leveldiv/campaign.hpp"
#include "leveldiv/game_file.hpp"
#include "leveldiv/random_games.hpp"
#include "leveldiv/result_table.hpp"
#include "leveldiv/values.hpp"

namespace {

using namespace leveldiv;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;      // bad flags, unloadable or invalid games
constexpr int kExitAxiomFail = 2;  // an expected-pass axiom check failed

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : csv) {
    if (c == ',') {
      if (!current.empty()) parts.push_back(std::exchange(current, {}));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  if (!current.empty()) parts.push_back(current);
  return parts;
}

std::vector<ValueId> parse_values_flag(const std::string& csv) {
  if (csv == "all") return {std::begin(kAllValues), std::end(kAllValues)};
  std::vector<ValueId> out;
  for (const std::string& tag : split_csv(csv)) out.push_back(parse_value_tag(tag));
  if (out.empty()) throw std::invalid_argument("--values needs at least one tag or 'all'");
  return out;
}

std::vector<AxiomId> parse_axioms_flag(const std::string& csv) {
  if (csv == "all") return {std::begin(kAllAxioms), std::end(kAllAxioms)};
  std::vector<AxiomId> out;
  for (const std::string& tag : split_csv(csv)) out.push_back(parse_axiom_tag(tag));
  if (out.empty()) throw std::invalid_argument("--axioms needs at least one tag or 'all'");
  return out;
}

LoadedGame read_game(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return load_game_text(buffer.str());
  }
  return load_game(path);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << text;
}

std::vector<std::string> index_labels(int n) {
  std::vector<std::string> labels;
  for (int p = 0; p < n; ++p) labels.push_back(std::to_string(p + 1));
  return labels;
}

bool is_expected(ValueId value, AxiomId axiom) {
  const std::vector<AxiomId> set = characterizing_axioms(value);
  return std::find(set.begin(), set.end(), axiom) != set.end();
}

// ---------------------------------------------------------------- compute --

struct ComputeOptions {
  std::string game = "-";
  std::string values = "all";
  std::string format = "text";
  bool exact = false;
};

int run_compute(const ComputeOptions& opt) {
  const LoadedGame loaded = read_game(opt.game);
  ResultTable table(loaded.labels);
  try {
    for (ValueId id : parse_values_flag(opt.values)) {
      const Allocation payoffs = compute(id, loaded.game);
      if (opt.exact)
        table.add_exact_row(id, payoffs, compute_exact(id, loaded.game));
      else
        table.add_row(id, payoffs);
    }
  } catch (const MissingWorthError& e) {
    std::cerr << "error: worth undefined for coalition " << loaded.render_coalition(e.coalition())
              << "\n";
    return kExitUsage;
  }
  if (opt.format == "json")
    std::cout << table.render_json() << "\n";
  else
    std::cout << table.render_text();
  return kExitOk;
}

// ----------------------------------------------------------------- verify --

struct VerifyOptions {
  std::string game;
  bool random = false;
  bool search = false;
  std::string values = "all";
  std::string axioms;  // empty: each value's expected set
  double tol = 1e-9;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::string format = "text";
};

std::string witness_lines(const AxiomReport& report) {
  std::string out;
  for (const AxiomWitness& w : report.witnesses) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "       %s | %s: %.12g vs %.12g (gap %.3g)\n", w.game.c_str(),
                  w.subject.c_str(), w.lhs, w.rhs, w.gap);
    out += buf;
  }
  return out;
}

std::string check_line(const AxiomReport& report, bool expected) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%-6s %-22s %s%s\n", report.value.c_str(),
                axiom_tag(report.axiom).c_str(), report.passed ? "pass" : "FAIL",
                expected || report.passed ? "" : "  [informational]");
  return buf;
}

nlohmann::json check_json(const AxiomReport& report, bool expected) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const AxiomWitness& w : report.witnesses)
    witnesses.push_back({{"game", w.game},
                         {"subject", w.subject},
                         {"lhs", w.lhs},
                         {"rhs", w.rhs},
                         {"gap", w.gap}});
  return {{"value", report.value},
          {"axiom", axiom_tag(report.axiom)},
          {"expected", expected},
          {"passed", report.passed},
          {"witnesses", std::move(witnesses)}};
}

int run_verify_single(const VerifyOptions& opt) {
  const LoadedGame loaded = read_game(opt.game);
  int expected_failures = 0;
  int checks = 0;
  std::string text;
  nlohmann::json jchecks = nlohmann::json::array();
  try {
    for (ValueId value : parse_values_flag(opt.values)) {
      const std::vector<AxiomId> axioms =
          opt.axioms.empty() ? characterizing_axioms(value) : parse_axioms_flag(opt.axioms);
      for (AxiomId axiom : axioms) {
        const AxiomReport report = run_check(axiom, value, loaded.game, std::nullopt, opt.tol);
        const bool expected = is_expected(value, axiom);
        ++checks;
        if (!report.passed && expected) ++expected_failures;
        text += check_line(report, expected);
        if (!report.passed) text += witness_lines(report);
        jchecks.push_back(check_json(report, expected));
      }
    }
  } catch (const MissingWorthError& e) {
    std::cerr << "error: axiom check needs worth for coalition "
              << loaded.render_coalition(e.coalition()) << "\n";
    return kExitUsage;
  }
  if (opt.format == "json") {
    const nlohmann::json doc = {{"game", loaded.name},
                                {"digest", game_digest(loaded.game)},
                                {"checks", std::move(jchecks)},
                                {"expected_failures", expected_failures},
                                {"passed", expected_failures == 0}};
    std::cout << doc.dump(2) << "\n";
  } else {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d checks, %d failures in the expected set\n", checks,
                  expected_failures);
    std::cout << text << buf;
  }
  return expected_failures == 0 ? kExitOk : kExitAxiomFail;
}

int run_verify_campaign(const VerifyOptions& opt) {
  if (!opt.axioms.empty())
    throw std::invalid_argument(
        "--axioms does not combine with --random; the campaign checks each value's expected set");
  CampaignOptions copt;
  copt.seed = opt.seed.value_or(copt.seed);
  copt.trials = opt.trials.value_or(copt.trials);
  copt.tol = opt.tol;
  const CampaignResult result =
      run_expected_pass_campaign(copt, parse_values_flag(opt.values));
  if (opt.format == "json") {
    nlohmann::json failures = nlohmann::json::array();
    for (const CampaignFailure& f : result.failures)
      failures.push_back({{"value", value_tag(f.value)},
                          {"axiom", axiom_tag(f.axiom)},
                          {"seed", f.seed},
                          {"game", f.witness.game},
                          {"subject", f.witness.subject},
                          {"lhs", f.witness.lhs},
                          {"rhs", f.witness.rhs},
                          {"gap", f.witness.gap}});
    const nlohmann::json doc = {{"seed", copt.seed},
                                {"games", result.games_checked},
                                {"checks", result.checks_run},
                                {"failures", std::move(failures)},
                                {"passed", result.passed()}};
    std::cout << doc.dump(2) << "\n";
  } else {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "campaign: %d games (seed %llu, n <= %d, k <= %d, worths %d..%d), %d checks\n",
                  result.games_checked, static_cast<unsigned long long>(copt.seed), copt.n_max,
                  copt.k_max, copt.worth_lo, copt.worth_hi, result.checks_run);
    std::cout << buf;
    for (const CampaignFailure& f : result.failures) {
      std::snprintf(buf, sizeof(buf), "FAIL %s %s on trial seed %llu (replay: random --seed %llu)\n",
                    value_tag(f.value).c_str(), axiom_tag(f.axiom).c_str(),
                    static_cast<unsigned long long>(f.seed),
                    static_cast<unsigned long long>(f.seed));
      std::cout << buf;
      AxiomReport report{f.axiom, value_tag(f.value), false, {f.witness}};
      std::cout << witness_lines(report);
    }
    std::cout << (result.passed() ? "all expected-pass checks passed\n"
                                  : "expected-pass failures found\n");
  }
  return result.passed() ? kExitOk : kExitAxiomFail;
}

int run_verify_search(const VerifyOptions& opt) {
  if (opt.axioms.empty())
    throw std::invalid_argument("--search needs --axioms (which axiom to hunt a witness for)");
  SearchOptions sopt;
  sopt.seed = opt.seed.value_or(sopt.seed);
  sopt.trials = opt.trials.value_or(sopt.trials);
  sopt.tol = opt.tol;
  int expected_failures = 0;
  std::string text;
  nlohmann::json jsearches = nlohmann::json::array();
  for (ValueId value : parse_values_flag(opt.values)) {
    for (AxiomId axiom : parse_axioms_flag(opt.axioms)) {
      const bool expected = is_expected(value, axiom);
      const std::optional<SearchHit> hit = search_counterexample(value, axiom, sopt);
      nlohmann::json entry = {{"value", value_tag(value)},
                              {"axiom", axiom_tag(axiom)},
                              {"expected", expected},
                              {"found", hit.has_value()},
                              {"trials", sopt.trials}};
      char buf[160];
      if (hit) {
        if (expected) ++expected_failures;
        std::snprintf(buf, sizeof(buf), "search %s / %s: witness found at trial %d (seed %llu)%s\n",
                      value_tag(value).c_str(), axiom_tag(axiom).c_str(), hit->trial,
                      static_cast<unsigned long long>(hit->seed),
                      expected ? "  [expected-pass violated]" : "");
        text += buf;
        text += witness_lines(hit->report);
        const LevelGame game = search_game(hit->seed, axiom, sopt);
        const LoadedGame witness{game, index_labels(game.player_count()), "", {}};
        const std::string file = serialize(witness);
        std::istringstream lines(file);
        std::string line;
        while (std::getline(lines, line)) text += "  | " + line + "\n";
        entry["trial"] = hit->trial;
        entry["seed"] = hit->seed;
        entry["game_file"] = file;
      } else {
        std::snprintf(buf, sizeof(buf), "search %s / %s: not found in %d trials (seed %llu)\n",
                      value_tag(value).c_str(), axiom_tag(axiom).c_str(), sopt.trials,
                      static_cast<unsigned long long>(sopt.seed));
        text += buf;
      }
      jsearches.push_back(std::move(entry));
    }
  }
  if (opt.format == "json") {
    const nlohmann::json doc = {{"searches", std::move(jsearches)},
                                {"expected_failures", expected_failures},
                                {"passed", expected_failures == 0}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return expected_failures == 0 ? kExitOk : kExitAxiomFail;
}

int run_verify(const VerifyOptions& opt) {
  if (opt.random && !opt.game.empty())
    throw std::invalid_argument("--game and --random are mutually exclusive");
  if (opt.search && opt.random)
    throw std::invalid_argument("--search and --random are mutually exclusive");
  if (opt.search) return run_verify_search(opt);
  if (opt.random) return run_verify_campaign(opt);
  if (opt.game.empty())
    throw std::invalid_argument("verify needs --game PATH (or --random / --search)");
  return run_verify_single(opt);
}

// ------------------------------------------------------- example / random --

struct ExampleOptions {
  std::string name;
  std::string out;
};

int run_example(const ExampleOptions& opt) {
  write_output(bundled_example(opt.name), opt.out);
  return kExitOk;
}

struct RandomOptions {
  std::uint64_t seed = 42;
  int max_players = 6;
  int max_levels = 3;
  int worth_lo = -10;
  int worth_hi = 10;
  std::string out;
};

int run_random(const RandomOptions& opt) {
  if (opt.worth_lo > opt.worth_hi)
    throw std::invalid_argument("--worth-lo must not exceed --worth-hi");
  const LevelGame game =
      random_level_game(opt.seed, opt.max_players, opt.max_levels, opt.worth_lo, opt.worth_hi);
  const LoadedGame loaded{game, index_labels(game.player_count()),
                          "random-" + std::to_string(opt.seed), {}};
  write_output(serialize(loaded), opt.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"egalitarian values for TU games with level structures"};
  app.require_subcommand(1);

  ComputeOptions copt;
  CLI::App* compute_cmd = app.add_subcommand("compute", "evaluate allocation rules on a game");
  compute_cmd->add_option("--game", copt.game, "game file path, or '-' for stdin (default)");
  compute_cmd->add_option("--values,--value", copt.values,
                          "comma-separated rule tags (ed, esd, led, lesd1, lesd2, lesd3) or 'all'");
  compute_cmd->add_option("--format", copt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  compute_cmd->add_flag("--exact", copt.exact, "show exact rational payoffs");

  VerifyOptions vopt;
  std::uint64_t verify_seed = 0;
  int verify_trials = 0;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check axioms against allocation rules");
  verify_cmd->add_option("--game", vopt.game, "game file path, or '-' for stdin");
  verify_cmd->add_flag("--random", vopt.random, "run a seeded campaign of random games");
  verify_cmd->add_flag("--search", vopt.search, "hunt for a counterexample game");
  verify_cmd->add_option("--values,--value", vopt.values, "rule tags or 'all'");
  verify_cmd->add_option("--axioms,--axiom", vopt.axioms,
                         "axiom tags or 'all'; default is each rule's expected set");
  verify_cmd->add_option("--tol", vopt.tol, "numeric tolerance")->capture_default_str();
  CLI::Option* seed_opt = verify_cmd->add_option("--seed", verify_seed, "campaign/search seed");
  CLI::Option* trials_opt = verify_cmd->add_option("--trials", verify_trials, "number of games");
  verify_cmd->add_option("--format", vopt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  ExampleOptions eopt;
  CLI::App* example_cmd = app.add_subcommand("example", "emit a bundled example game file");
  example_cmd->add_option("name", eopt.name, "example name (parking)")->required();
  example_cmd->add_option("--out", eopt.out, "write to a file instead of stdout");

  RandomOptions ropt;
  CLI::App* random_cmd = app.add_subcommand("random", "emit a seeded random game file");
  random_cmd->add_option("--seed", ropt.seed, "generator seed")->capture_default_str();
  random_cmd->add_option("--max-players", ropt.max_players, "player count upper bound")
      ->capture_default_str();
  random_cmd->add_option("--max-levels", ropt.max_levels, "intermediate level upper bound")
      ->capture_default_str();
  random_cmd->add_option("--worth-lo", ropt.worth_lo, "smallest integer worth")
      ->capture_default_str();
  random_cmd->add_option("--worth-hi", ropt.worth_hi, "largest integer worth")
      ->capture_default_str();
  random_cmd->add_option("--out", ropt.out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (seed_opt->count() > 0) vopt.seed = verify_seed;
  if (trials_opt->count() > 0) vopt.trials = verify_trials;

  try {
    if (app.got_subcommand(compute_cmd)) return run_compute(copt);
    if (app.got_subcommand(verify_cmd)) return run_verify(vopt);
    if (app.got_subcommand(example_cmd)) return run_example(eopt);
    if (app.got_subcommand(random_cmd)) return run_random(ropt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
