#pragma once

#include <string>
#include <vector>

#include "leveldiv/level_game.hpp"

namespace leveldiv {

// Cost model for a shared parking facility: several lifts, each serving a
// stack of floors, each floor holding some owners' parking places.

struct FeeSchedule {
  double fixed = 50.0;      // flat cost of the shared area
  double per_lift = 50.0;   // per lift that anyone in the coalition uses
  double per_floor = 4.0;   // per floor the lift must reach (highest used)
  double per_place = 10.0;  // per parking place
};

struct BuildingTopology {
  struct Floor {
    std::vector<std::string> owners;  // labels, unique across the topology
  };
  struct Lift {
    std::vector<Floor> floors;  // ground up; index + 1 is the floor number
  };
  std::vector<Lift> lifts;
};

// Owner labels in canonical order: lift by lift, floor by floor, left to
// right within a floor. This order fixes the player indices everywhere else.
std::vector<std::string> owners(const BuildingTopology& topology);

// Throws std::invalid_argument on empty lifts/floors or duplicate labels.
void validate(const BuildingTopology& topology);

// Cost of serving exactly the owners in `coalition` (indices into owners()):
// fixed + per_lift * lifts used + per_floor * sum of highest reached floor
// per used lift + per_place * coalition size. The empty coalition is free.
double fee(const FeeSchedule& schedule, const BuildingTopology& topology, Coalition coalition);

// The complete cost game over all owners, with levels floors < lifts.
// Degenerate topologies keep both levels (single-block levels are fine).
LevelGame build_level_game(const FeeSchedule& schedule, const BuildingTopology& topology);

// The two-lift, five-owner worked example used in tests and the CLI.
BuildingTopology parking_topology();

}  // namespace leveldiv
