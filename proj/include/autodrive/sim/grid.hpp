#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace autodrive::sim {

// Raster occupancy mask, row-major with y pointing down. A cell is drivable
// when its byte is non-zero. Everything outside the raster is a wall.
class OccupancyGrid {
 public:
  OccupancyGrid() = default;
  // Throws std::invalid_argument when the mask size does not equal
  // width * height or when no cell is drivable.
  OccupancyGrid(int width, int height, std::vector<std::uint8_t> cells);

  static OccupancyGrid filled(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }

  bool in_bounds(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  bool drivable(int x, int y) const {
    return in_bounds(x, y) &&
           cells_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                  static_cast<std::size_t>(x)] != 0;
  }
  // Looks up the cell containing a real-valued point.
  bool drivable_at(double x, double y) const;

  std::span<const std::uint8_t> cells() const { return cells_; }
  std::size_t drivable_count() const;

  bool operator==(const OccupancyGrid&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> cells_;
};

}  // namespace autodrive::sim
