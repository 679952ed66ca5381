#include "autodrive/sim/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace autodrive::sim {

OccupancyGrid::OccupancyGrid(int width, int height, std::vector<std::uint8_t> cells)
    : width_(width), height_(height), cells_(std::move(cells)) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("occupancy grid dimensions must be positive");
  }
  if (cells_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw std::invalid_argument("occupancy mask has " + std::to_string(cells_.size()) +
                                " cells, expected " + std::to_string(width) + "x" +
                                std::to_string(height));
  }
  for (auto& c : cells_) c = c != 0 ? 1 : 0;
  if (drivable_count() == 0) {
    throw std::invalid_argument("occupancy grid has no drivable cell");
  }
}

OccupancyGrid OccupancyGrid::filled(int width, int height) {
  return OccupancyGrid(width, height,
                       std::vector<std::uint8_t>(static_cast<std::size_t>(width) *
                                                     static_cast<std::size_t>(height),
                                                 1));
}

bool OccupancyGrid::drivable_at(double x, double y) const {
  if (!(x >= 0.0 && y >= 0.0 && x < width_ && y < height_)) return false;
  return drivable(static_cast<int>(x), static_cast<int>(y));
}

std::size_t OccupancyGrid::drivable_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

}  // namespace autodrive::sim
