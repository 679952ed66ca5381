#pragma once

#include <string>
#include <vector>

#include "autodrive/sim/car.hpp"
#include "autodrive/sim/geometry.hpp"
#include "autodrive/sim/grid.hpp"

namespace autodrive::sim {

struct Checkpoint {
  Vec2 center;
  double radius = 0.0;
  int index = 0;
  bool operator==(const Checkpoint&) const = default;
};

struct TrackMap {
  std::string name;
  OccupancyGrid grid;
  Pose start;
  std::vector<Checkpoint> checkpoints;
  Segment finish;

  Extent extent() const { return {grid.width(), grid.height()}; }

  // Checks the structural invariants: drivable start, checkpoint centers on
  // drivable cells with contiguous indices, finish endpoints inside the grid.
  // Throws std::invalid_argument naming the first violation.
  void validate() const;

  bool operator==(const TrackMap&) const = default;
};

}  // namespace autodrive::sim
