#pragma once

// Hand-built tracks and genomes shared by the unit and acceptance tests.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "autodrive/neat/genome.hpp"
#include "autodrive/sim/track.hpp"

namespace fixtures {

using namespace autodrive;

// Drivable rectangle [x0, x1] x [y0, y1] (inclusive) inside a wall-filled raster.
inline sim::OccupancyGrid rect_grid(int w, int h, int x0, int y0, int x1, int y1) {
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) cells[static_cast<std::size_t>(y) * w + x] = 1;
  }
  return sim::OccupancyGrid(w, h, std::move(cells));
}

// Corridor running along +y (heading 0) with walls at x = cx - half - 1 and
// x = cx + half + 1. Checkpoints sit on the centerline every `spacing` px
// from the start; the finish line crosses the corridor near the far end.
inline sim::TrackMap vertical_corridor(int length = 2000, int half = 30, int checkpoints = 3,
                                       double spacing = 200.0) {
  const int w = 2 * half + 41;
  const int cx = w / 2;
  sim::TrackMap t;
  t.name = "corridor";
  t.grid = rect_grid(w, length, cx - half, 0, cx + half, length - 1);
  t.start = sim::Pose{static_cast<double>(cx), 20.0, 0.0};
  for (int i = 0; i < checkpoints; ++i) {
    t.checkpoints.push_back(
        sim::Checkpoint{sim::Vec2{static_cast<double>(cx), 20.0 + spacing * (i + 1)}, 15.0, i});
  }
  const double fy = 20.0 + spacing * (checkpoints + 1);
  t.finish = sim::Segment{sim::Vec2{static_cast<double>(cx - half), fy},
                          sim::Vec2{static_cast<double>(cx + half), fy}};
  t.validate();
  return t;
}

// Minimal 5-input / 4-output genome, no connections, all biases zero.
inline neat::Genome bare_genome(int key = 0) {
  neat::Genome g;
  g.key = key;
  for (int k = 0; k < 5; ++k) g.nodes.emplace(k, neat::NodeGene{k, neat::NodeKind::Input, 0.0});
  for (int k = 5; k < 9; ++k) g.nodes.emplace(k, neat::NodeGene{k, neat::NodeKind::Output, 0.0});
  return g;
}

inline std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("autodrive_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace fixtures
