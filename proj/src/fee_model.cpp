#include "leveldiv/fee_model.hpp"

#include <set>
#include <stdexcept>

namespace leveldiv {

std::vector<std::string> owners(const BuildingTopology& topology) {
  std::vector<std::string> out;
  for (const auto& lift : topology.lifts)
    for (const auto& floor : lift.floors)
      for (const auto& owner : floor.owners) out.push_back(owner);
  return out;
}

void validate(const BuildingTopology& topology) {
  if (topology.lifts.empty()) throw std::invalid_argument("topology needs at least one lift");
  std::set<std::string> seen;
  for (const auto& lift : topology.lifts) {
    if (lift.floors.empty()) throw std::invalid_argument("every lift needs at least one floor");
    for (const auto& floor : lift.floors) {
      if (floor.owners.empty())
        throw std::invalid_argument("every floor needs at least one owner");
      for (const auto& owner : floor.owners)
        if (!seen.insert(owner).second)
          throw std::invalid_argument("duplicate owner label '" + owner + "'");
    }
  }
  if (seen.size() > Coalition::kMaxPlayers)
    throw std::invalid_argument("at most 64 owners are supported");
}

double fee(const FeeSchedule& schedule, const BuildingTopology& topology, Coalition coalition) {
  validate(topology);
  const int total_owners = static_cast<int>(owners(topology).size());
  if (!coalition.subset_of(Coalition::all(total_owners)))
    throw std::invalid_argument("coalition mentions an owner outside the topology");
  if (coalition.empty()) return 0.0;
  double cost = schedule.fixed + schedule.per_place * coalition.size();
  int player = 0;
  for (const auto& lift : topology.lifts) {
    int highest = 0;
    for (std::size_t f = 0; f < lift.floors.size(); ++f)
      for (std::size_t o = 0; o < lift.floors[f].owners.size(); ++o, ++player)
        if (coalition.contains(player)) highest = static_cast<int>(f) + 1;
    if (highest > 0) cost += schedule.per_lift + schedule.per_floor * highest;
  }
  return cost;
}

LevelGame build_level_game(const FeeSchedule& schedule, const BuildingTopology& topology) {
  validate(topology);
  const int n = static_cast<int>(owners(topology).size());
  if (n > CharacteristicFunction::kMaxCompletePlayers)
    throw std::invalid_argument("complete fee games support at most 20 owners");

  std::vector<Coalition> floor_blocks;
  std::vector<Coalition> lift_blocks;
  int player = 0;
  for (const auto& lift : topology.lifts) {
    Coalition lift_block;
    for (const auto& floor : lift.floors) {
      Coalition floor_block;
      for (std::size_t o = 0; o < floor.owners.size(); ++o, ++player)
        floor_block = floor_block.with(player);
      floor_blocks.push_back(floor_block);
      lift_block = lift_block.unite(floor_block);
    }
    lift_blocks.push_back(lift_block);
  }
  LevelStructure structure = LevelStructure::from_intermediate(
      n, {Partition(n, std::move(floor_blocks)), Partition(n, std::move(lift_blocks))});

  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t m = 1; m < table.size(); ++m)
    table[m] = fee(schedule, topology, Coalition(m));
  return LevelGame(CharacteristicFunction::complete(n, std::move(table)), std::move(structure));
}

BuildingTopology parking_topology() {
  using Floor = BuildingTopology::Floor;
  BuildingTopology topology;
  BuildingTopology::Lift lift1;
  lift1.floors = {Floor{{"1"}}, Floor{{"2"}}};
  BuildingTopology::Lift lift2;
  lift2.floors = {Floor{{"3"}}, Floor{{"4", "5"}}};
  topology.lifts = {lift1, lift2};
  return topology;
}

}  // namespace leveldiv
