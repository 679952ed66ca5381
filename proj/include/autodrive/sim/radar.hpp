#pragma once

#include <array>

#include "autodrive/sim/car.hpp"
#include "autodrive/sim/geometry.hpp"
#include "autodrive/sim/grid.hpp"
#include "autodrive/sim/track.hpp"

namespace autodrive::sim {

// Heading-relative sensor offsets in degrees, left to right.
inline constexpr std::array<double, 5> kRadarOffsets = {-90.0, -45.0, 0.0, 45.0, 90.0};

struct RadarReading {
  std::array<double, 5> distances{};
  bool operator==(const RadarReading&) const = default;
};

// Distance from origin to the first wall cell along a world heading, walked in
// 1 px increments and capped at r_max. A wall origin yields 0.
double cast_ray(const OccupancyGrid& grid, Vec2 origin, double angle_deg, double r_max);

RadarReading sense(const TrackMap& track, const CarState& car, const EnvConfig& cfg);

// Corners of the car's rotated rectangle: front-left, front-right,
// rear-right, rear-left.
std::array<Vec2, 4> car_corners(const CarState& car, const EnvConfig& cfg);

bool collided(const OccupancyGrid& grid, const CarState& car, const EnvConfig& cfg);
inline bool collided(const TrackMap& track, const CarState& car, const EnvConfig& cfg) {
  return collided(track.grid, car, cfg);
}

}  // namespace autodrive::sim
