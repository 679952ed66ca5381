#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "autodrive/sim/geometry.hpp"
#include "autodrive/sim/track.hpp"

namespace autodrive::sim {

enum class Archetype { SimpleLoop, CurvedLoop, SharpTurns, ConstantTwists };

inline constexpr std::array<Archetype, 4> kAllArchetypes = {
    Archetype::SimpleLoop, Archetype::CurvedLoop, Archetype::SharpTurns,
    Archetype::ConstantTwists};

std::string_view to_string(Archetype a);
std::optional<Archetype> parse_archetype(std::string_view name);

// Track aspects exposed to the generator. A default-constructed value holds
// the SimpleLoop defaults; default_params() gives every archetype's.
struct MapParams {
  int width = 1920;
  int height = 1080;
  double track_width = 120.0;     // corridor width in px
  int checkpoints = 4;
  double sharpness = 1.0;         // scales turn amplitude / corner tightness
  int turns = 0;                  // number of turn sections (archetype specific)
  double scale = 1.0;             // fraction of the raster the loop spans (total distance)
  double straight_fraction = 0.5; // 0 = round loop, 1 = boxy loop with long straights
  double car_width = 10.0;        // narrowest legal corridor is 3x this
  double margin = 20.0;           // wall band kept around the raster edge

  bool operator==(const MapParams&) const = default;
};

MapParams default_params(Archetype a);

// Closed centerline (uniformly resampled, last point != first) the corridor is
// built around. Exposed for diagnostics and tests.
std::vector<Vec2> generate_centerline(Archetype a, const MapParams& params, std::uint64_t seed);

// Throws std::invalid_argument when the corridor is narrower than three car
// widths, when fewer than one checkpoint is requested or when the loop does
// not fit the raster.
TrackMap generate_map(Archetype a, const MapParams& params, std::uint64_t seed);

}  // namespace autodrive::sim
