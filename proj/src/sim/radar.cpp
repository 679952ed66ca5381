#include "autodrive/sim/radar.hpp"

namespace autodrive::sim {

double cast_ray(const OccupancyGrid& grid, Vec2 origin, double angle_deg, double r_max) {
  if (!grid.drivable_at(origin.x, origin.y)) return 0.0;
  const Vec2 dir = heading_vector(angle_deg);
  for (double t = 1.0; t < r_max; t += 1.0) {
    if (!grid.drivable_at(origin.x + dir.x * t, origin.y + dir.y * t)) return t;
  }
  return r_max;
}

RadarReading sense(const TrackMap& track, const CarState& car, const EnvConfig& cfg) {
  RadarReading reading;
  const Vec2 center{car.pose.x, car.pose.y};
  for (std::size_t i = 0; i < kRadarOffsets.size(); ++i) {
    reading.distances[i] =
        cast_ray(track.grid, center, car.pose.angle + kRadarOffsets[i], cfg.radar_max);
  }
  return reading;
}

std::array<Vec2, 4> car_corners(const CarState& car, const EnvConfig& cfg) {
  const Vec2 center{car.pose.x, car.pose.y};
  const Vec2 unit = heading_vector(car.pose.angle);
  const Vec2 fwd = unit * cfg.car_half_length;
  const Vec2 side = Vec2{-unit.y, unit.x} * cfg.car_half_width;
  return {center + fwd + side, center + fwd - side, center - fwd - side, center - fwd + side};
}

bool collided(const OccupancyGrid& grid, const CarState& car, const EnvConfig& cfg) {
  for (const Vec2& c : car_corners(car, cfg)) {
    if (!grid.drivable_at(c.x, c.y)) return true;
  }
  return false;
}

}  // namespace autodrive::sim
