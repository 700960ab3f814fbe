#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leveldiv/fee_model.hpp"
#include "leveldiv/level_game.hpp"

namespace leveldiv {

// Game files are plain text, one directive per line, '#' starts a comment.
// Coalitions are bracketed label lists. Canonical field order:
//
//   name parking              (optional)
//   meta anything at all      (optional, repeatable)
//   players 1 2 3 4 5
//   level [1] [2] [3] [4 5]   (intermediate levels only, bottom-up;
//   level [1 2] [3 4 5]        omitted entirely means no intermediate levels)
//   worth [1] 114             (one record per coalition; empty set implied 0)
//   ...
//
// or, generated worths instead of explicit records:
//
//   generator fee_model
//   schedule fixed 50 per_lift 50 per_floor 4 per_place 10   (optional)
//   lift [1] [2]              (floor blocks, ground floor first)
//   lift [3] [4 5]
//
// A generator file derives players, levels (floors below lifts), and the
// complete worth table from the topology; players/level lines are then
// redundant and only a matching players line is accepted.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

struct FeeModelSpec {
  FeeSchedule schedule;
  BuildingTopology topology;
};

// Faithful parse of a file: labels and blocks as written, nothing resolved.
struct GameFile {
  std::string name;
  std::vector<std::string> meta;
  std::vector<std::string> players;
  std::vector<std::vector<std::vector<std::string>>> levels;
  std::vector<std::pair<std::vector<std::string>, double>> worths;
  std::optional<FeeModelSpec> generator;
};

GameFile parse_game_file(const std::string& text);

// A validated game plus the label mapping (player index -> label).
struct LoadedGame {
  LevelGame game;
  std::vector<std::string> labels;
  std::string name;
  std::vector<std::string> meta;

  int label_index(const std::string& label) const;  // -1 when unknown
  std::string render_coalition(Coalition s) const;  // "[4 5]"
};

// Validation errors (unknown labels, non-nesting levels, duplicate records)
// come out as std::invalid_argument with label-based messages.
LoadedGame realize(const GameFile& file);

LoadedGame load_game_text(const std::string& text);
LoadedGame load_game(const std::string& path);

// Canonical explicit serialization: name, meta, players, levels, then one
// worth record per defined coalition in increasing mask order. Loading the
// output reproduces the game; serializing a canonical file is the identity.
std::string serialize(const LoadedGame& game);

// Built-in example games by name; unknown names throw with the list.
std::string bundled_example(const std::string& name);
std::vector<std::string> bundled_example_names();

}  // namespace leveldiv
