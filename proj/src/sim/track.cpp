#include "autodrive/sim/track.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace autodrive::sim {

void TrackMap::validate() const {
  auto inside = [this](Vec2 p) {
    return p.x >= 0.0 && p.y >= 0.0 && p.x <= grid.width() && p.y <= grid.height();
  };
  if (grid.width() <= 0 || grid.height() <= 0) {
    throw std::invalid_argument("track '" + name + "' has an empty grid");
  }
  if (!grid.drivable_at(start.x, start.y)) {
    throw std::invalid_argument("track '" + name + "' start pose is not on a drivable cell");
  }
  if (std::fmod(start.angle, 15.0) != 0.0 || start.angle < 0.0 || start.angle >= 360.0) {
    throw std::invalid_argument("track '" + name + "' start angle must be a multiple of 15 in [0, 360)");
  }
  if (checkpoints.empty()) {
    throw std::invalid_argument("track '" + name + "' has no checkpoints");
  }
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    const Checkpoint& cp = checkpoints[i];
    if (cp.index != static_cast<int>(i)) {
      throw std::invalid_argument("checkpoint indices must be contiguous from 0");
    }
    if (!(cp.radius > 0.0)) {
      throw std::invalid_argument("checkpoint " + std::to_string(i) + " has non-positive radius");
    }
    if (!grid.drivable_at(cp.center.x, cp.center.y)) {
      throw std::invalid_argument("checkpoint " + std::to_string(i) + " is not on a drivable cell");
    }
  }
  if (!inside(finish.a) || !inside(finish.b)) {
    throw std::invalid_argument("track '" + name + "' finish line leaves the grid");
  }
}

}  // namespace autodrive::sim
