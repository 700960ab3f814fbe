#include "leveldiv/game_file.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace leveldiv {

namespace {

// Shortest decimal form that parses back to exactly the same double;
// integral values print as plain integers.
std::string format_worth(double x) {
  if (x == 0.0) return "0";
  if (x == std::floor(x) && std::abs(x) < 9.007199254740992e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(x));
    return buf;
  }
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Splits on whitespace with '[' and ']' as standalone tokens; '#' starts a
// comment. `raw` keyword lines (name, meta) are handled before tokenizing.
std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c)) || c == '[' || c == ']') {
      if (!current.empty()) tokens.push_back(std::exchange(current, {}));
      if (c == '[') tokens.emplace_back("[");
      if (c == ']') tokens.emplace_back("]");
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(current);
  return tokens;
}

std::string strip(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Consumes "[ label... ]" starting at tokens[pos].
std::vector<std::string> parse_block(const Line& line, std::size_t& pos) {
  if (pos >= line.tokens.size() || line.tokens[pos] != "[")
    throw ParseError(line.number, "expected '[' to open a coalition");
  ++pos;
  std::vector<std::string> labels;
  while (pos < line.tokens.size() && line.tokens[pos] != "]") labels.push_back(line.tokens[pos++]);
  if (pos >= line.tokens.size()) throw ParseError(line.number, "missing ']' after coalition");
  ++pos;
  return labels;
}

double parse_number(const Line& line, const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double x = std::strtod(begin, &end);
  if (end != begin + token.size() || !std::isfinite(x))
    throw ParseError(line.number, "'" + token + "' is not a finite number");
  return x;
}

}  // namespace

GameFile parse_game_file(const std::string& text) {
  GameFile file;
  bool saw_players = false;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string stripped = strip(raw);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t keyword_end = stripped.find_first_of(" \t");
    const std::string keyword = stripped.substr(0, keyword_end);
    if (keyword == "name" || keyword == "meta") {
      const std::string rest =
          keyword_end == std::string::npos ? "" : strip(stripped.substr(keyword_end));
      if (keyword == "name") {
        if (rest.empty()) throw ParseError(number, "name line needs a value");
        file.name = rest;
      } else {
        file.meta.push_back(rest);
      }
      continue;
    }
    Line line{number, tokenize(stripped)};
    if (line.tokens.empty()) continue;
    std::size_t pos = 1;
    if (keyword == "players") {
      if (saw_players) throw ParseError(number, "duplicate players line");
      saw_players = true;
      while (pos < line.tokens.size()) {
        if (line.tokens[pos] == "[" || line.tokens[pos] == "]")
          throw ParseError(number, "players line takes bare labels, not coalitions");
        file.players.push_back(line.tokens[pos++]);
      }
      if (file.players.empty()) throw ParseError(number, "players line needs at least one label");
    } else if (keyword == "level") {
      std::vector<std::vector<std::string>> blocks;
      while (pos < line.tokens.size()) {
        std::vector<std::string> block = parse_block(line, pos);
        if (block.empty()) throw ParseError(number, "level blocks must be nonempty");
        blocks.push_back(std::move(block));
      }
      if (blocks.empty()) throw ParseError(number, "level line needs at least one block");
      file.levels.push_back(std::move(blocks));
    } else if (keyword == "worth") {
      std::vector<std::string> block = parse_block(line, pos);
      if (block.empty()) throw ParseError(number, "worth record for the empty coalition");
      if (pos >= line.tokens.size()) throw ParseError(number, "worth record needs a number");
      const double value = parse_number(line, line.tokens[pos++]);
      if (pos != line.tokens.size()) throw ParseError(number, "trailing tokens after worth");
      file.worths.emplace_back(std::move(block), value);
    } else if (keyword == "generator") {
      if (pos >= line.tokens.size() || line.tokens[pos] != "fee_model")
        throw ParseError(number, "the only supported generator is fee_model");
      if (file.generator) throw ParseError(number, "duplicate generator line");
      file.generator.emplace();
    } else if (keyword == "schedule") {
      if (!file.generator) throw ParseError(number, "schedule line needs a generator line first");
      FeeSchedule& schedule = file.generator->schedule;
      while (pos < line.tokens.size()) {
        const std::string& field = line.tokens[pos++];
        if (pos >= line.tokens.size())
          throw ParseError(number, "schedule field '" + field + "' needs a value");
        const double value = parse_number(line, line.tokens[pos++]);
        if (field == "fixed") schedule.fixed = value;
        else if (field == "per_lift") schedule.per_lift = value;
        else if (field == "per_floor") schedule.per_floor = value;
        else if (field == "per_place") schedule.per_place = value;
        else throw ParseError(number, "unknown schedule field '" + field + "'");
      }
    } else if (keyword == "lift") {
      if (!file.generator) throw ParseError(number, "lift line needs a generator line first");
      BuildingTopology::Lift lift;
      while (pos < line.tokens.size()) {
        std::vector<std::string> floor = parse_block(line, pos);
        if (floor.empty()) throw ParseError(number, "floors must hold at least one owner");
        lift.floors.push_back(BuildingTopology::Floor{std::move(floor)});
      }
      if (lift.floors.empty()) throw ParseError(number, "lift line needs at least one floor");
      file.generator->topology.lifts.push_back(std::move(lift));
    } else {
      throw ParseError(number, "unknown directive '" + keyword + "'");
    }
  }
  return file;
}

int LoadedGame::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

std::string LoadedGame::render_coalition(Coalition s) const {
  std::string out = "[";
  bool first = true;
  for (PlayerId p : s.members()) {
    if (!first) out += ' ';
    out += labels.at(static_cast<std::size_t>(p));
    first = false;
  }
  return out + "]";
}

namespace {

std::string render_label_block(const std::vector<std::string>& labels, Coalition s) {
  std::string out = "[";
  bool first = true;
  for (PlayerId p : s.members()) {
    if (!first) out += ' ';
    out += labels.at(static_cast<std::size_t>(p));
    first = false;
  }
  return out + "]";
}

LoadedGame realize_generator(const GameFile& file) {
  if (!file.levels.empty())
    throw std::invalid_argument("level lines are not allowed with a generator");
  if (!file.worths.empty())
    throw std::invalid_argument("worth records are not allowed with a generator");
  const FeeModelSpec& spec = *file.generator;
  validate(spec.topology);
  std::vector<std::string> labels = owners(spec.topology);
  if (!file.players.empty() && file.players != labels)
    throw std::invalid_argument("players line does not match the generator topology");
  return LoadedGame{build_level_game(spec.schedule, spec.topology), std::move(labels), file.name,
                    file.meta};
}

LoadedGame realize_explicit(const GameFile& file) {
  if (file.players.empty()) throw std::invalid_argument("players line required");
  if (file.players.size() > Coalition::kMaxPlayers)
    throw std::invalid_argument("at most 64 players are supported");
  const int n = static_cast<int>(file.players.size());
  std::map<std::string, int> index_of;
  for (int p = 0; p < n; ++p)
    if (!index_of.emplace(file.players[static_cast<std::size_t>(p)], p).second)
      throw std::invalid_argument("duplicate player label '" +
                                  file.players[static_cast<std::size_t>(p)] + "'");
  auto resolve = [&index_of](const std::vector<std::string>& labels, const std::string& where) {
    Coalition s;
    for (const std::string& label : labels) {
      auto it = index_of.find(label);
      if (it == index_of.end())
        throw std::invalid_argument("unknown player label '" + label + "' in " + where);
      if (s.contains(it->second))
        throw std::invalid_argument("player label '" + label + "' repeated in " + where);
      s = s.with(it->second);
    }
    return s;
  };

  std::vector<Partition> intermediate;
  for (std::size_t l = 0; l < file.levels.size(); ++l) {
    std::vector<Coalition> blocks;
    for (const auto& labels : file.levels[l])
      blocks.push_back(resolve(labels, "level " + std::to_string(l + 1)));
    intermediate.emplace_back(n, std::move(blocks));
  }
  // Nesting check with label-based blame before the structure re-validates.
  for (std::size_t l = 0; l < intermediate.size(); ++l) {
    const Partition& upper = intermediate[l];
    const std::vector<Coalition> lower =
        l == 0 ? Partition::singletons(n).blocks() : intermediate[l - 1].blocks();
    for (const Coalition& b : lower) {
      const Coalition u = upper.block_containing(b.min_member());
      if (!b.subset_of(u))
        throw std::invalid_argument(
            "level " + std::to_string(l + 1) + " block " + render_label_block(file.players, u) +
            " splits level " + std::to_string(l) + " block " +
            render_label_block(file.players, b));
    }
  }

  std::map<std::uint64_t, double> entries;
  for (const auto& [labels, value] : file.worths) {
    const Coalition s = resolve(labels, "worth record");
    if (!entries.emplace(s.mask(), value).second)
      throw std::invalid_argument("duplicate worth record for coalition " +
                                  render_label_block(file.players, s));
  }

  const bool complete = n <= CharacteristicFunction::kMaxCompletePlayers &&
                        entries.size() == (std::size_t{1} << n) - 1;
  CharacteristicFunction v = [&] {
    if (!complete) return CharacteristicFunction::partial(n, std::move(entries));
    std::vector<double> table(std::size_t{1} << n);
    for (const auto& [mask, value] : entries) table[mask] = value;
    return CharacteristicFunction::complete(n, std::move(table));
  }();

  return LoadedGame{LevelGame(std::move(v), LevelStructure::from_intermediate(n, intermediate)),
                    file.players, file.name, file.meta};
}

}  // namespace

LoadedGame realize(const GameFile& file) {
  return file.generator ? realize_generator(file) : realize_explicit(file);
}

LoadedGame load_game_text(const std::string& text) { return realize(parse_game_file(text)); }

LoadedGame load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open game file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_game_text(buffer.str());
}

std::string serialize(const LoadedGame& loaded) {
  std::string out;
  if (!loaded.name.empty()) out += "name " + loaded.name + "\n";
  for (const std::string& m : loaded.meta) out += "meta " + m + "\n";
  out += "players";
  for (const std::string& label : loaded.labels) out += " " + label;
  out += "\n";
  const LevelStructure& structure = loaded.game.structure();
  for (int l = 1; l <= structure.k(); ++l) {
    out += "level";
    for (const Coalition& b : structure.level(l).blocks())
      out += " " + loaded.render_coalition(b);
    out += "\n";
  }
  for (const Coalition& s : loaded.game.v().defined_coalitions())
    out += "worth " + loaded.render_coalition(s) + " " + format_worth(loaded.game.v().worth(s)) +
           "\n";
  return out;
}

namespace {

constexpr const char* kParkingGame = R"(name parking
players 1 2 3 4 5
level [1] [2] [3] [4 5]
level [1 2] [3 4 5]
worth [1] 114
worth [2] 118
worth [1 2] 128
worth [3] 114
worth [1 3] 178
worth [2 3] 182
worth [1 2 3] 192
worth [4] 118
worth [1 4] 182
worth [2 4] 186
worth [1 2 4] 196
worth [3 4] 128
worth [1 3 4] 192
worth [2 3 4] 196
worth [1 2 3 4] 206
worth [5] 118
worth [1 5] 182
worth [2 5] 186
worth [1 2 5] 196
worth [3 5] 128
worth [1 3 5] 192
worth [2 3 5] 196
worth [1 2 3 5] 206
worth [4 5] 128
worth [1 4 5] 192
worth [2 4 5] 196
worth [1 2 4 5] 206
worth [3 4 5] 138
worth [1 3 4 5] 202
worth [2 3 4 5] 206
worth [1 2 3 4 5] 216
)";

}  // namespace

std::string bundled_example(const std::string& name) {
  if (name == "parking") return kParkingGame;
  std::string known;
  for (const std::string& candidate : bundled_example_names()) {
    if (!known.empty()) known += ", ";
    known += candidate;
  }
  throw std::invalid_argument("unknown example '" + name + "' (available: " + known + ")");
}

std::vector<std::string> bundled_example_names() { return {"parking"}; }

}  // namespace leveldiv
