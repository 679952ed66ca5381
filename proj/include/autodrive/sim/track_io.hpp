#pragma once

#include <filesystem>
#include <string>

#include "autodrive/sim/track.hpp"

namespace autodrive::sim {

// Binary PGM (P5): 255 drivable, 0 wall.
void write_pgm(const OccupancyGrid& grid, const std::filesystem::path& path);
OccupancyGrid read_pgm(const std::filesystem::path& path);

// JSON text for the track metadata (name, size, start, checkpoints, finish).
std::string track_meta_json(const TrackMap& track);

void save_track(const TrackMap& track, const std::filesystem::path& mask_path,
                const std::filesystem::path& meta_path);

// Throws std::runtime_error on I/O or format problems and
// std::invalid_argument when the pair violates a track invariant.
TrackMap load_track(const std::filesystem::path& mask_path,
                    const std::filesystem::path& meta_path);

// "maps/map1" -> maps/map1.pgm + maps/map1.json
TrackMap load_track(const std::filesystem::path& prefix);
void save_track(const TrackMap& track, const std::filesystem::path& prefix);

}  // namespace autodrive::sim
