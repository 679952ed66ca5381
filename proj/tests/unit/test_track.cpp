#include "doctest.h"

#include <stdexcept>

#include <fstream>
#include <sstream>

#include "autodrive/sim/mapgen.hpp"
#include "autodrive/sim/track_io.hpp"
#include "fixtures.hpp"

using namespace autodrive::sim;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("SimpleLoop with seed 7 is a 1920x1080 loop with four checkpoints") {
  const TrackMap t = generate_map(Archetype::SimpleLoop, default_params(Archetype::SimpleLoop), 7);
  CHECK(t.grid.width() == 1920);
  CHECK(t.grid.height() == 1080);
  CHECK(t.checkpoints.size() == 4);
  CHECK(t.name == "SimpleLoop");
  CHECK_NOTHROW(t.validate());
  // Annulus: the middle of the raster is wall, the start is track.
  CHECK_FALSE(t.grid.drivable(960, 540));
  CHECK(t.grid.drivable_at(t.start.x, t.start.y));
}

TEST_CASE("generate_map is reproducible") {
  for (Archetype a : kAllArchetypes) {
    const TrackMap x = generate_map(a, default_params(a), 7);
    const TrackMap y = generate_map(a, default_params(a), 7);
    CHECK(x == y);
  }
}

TEST_CASE("every archetype validates and its checkpoints lie on the mask") {
  for (Archetype a : kAllArchetypes) {
    for (std::uint64_t seed : {1u, 3u, 7u}) {
      const TrackMap t = generate_map(a, default_params(a), seed);
      CHECK_NOTHROW(t.validate());
      for (const Checkpoint& cp : t.checkpoints) {
        CHECK(t.grid.drivable(static_cast<int>(cp.center.x), static_cast<int>(cp.center.y)));
      }
      CHECK(std::fmod(t.start.angle, 15.0) == 0.0);
    }
  }
}

TEST_CASE("ConstantTwists at high sharpness keeps checkpoints on drivable cells") {
  MapParams p = default_params(Archetype::ConstantTwists);
  p.sharpness = 2.0;
  const TrackMap t = generate_map(Archetype::ConstantTwists, p, 3);
  // Scan the emitted mask rather than trusting validate().
  for (const Checkpoint& cp : t.checkpoints) {
    const auto x = static_cast<std::size_t>(cp.center.x), y = static_cast<std::size_t>(cp.center.y);
    CHECK(t.grid.cells()[y * static_cast<std::size_t>(t.grid.width()) + x] == 1);
  }
}

TEST_CASE("generator rejects impossible parameters") {
  MapParams p = default_params(Archetype::SimpleLoop);
  p.track_width = 20;  // < 3 car widths
  CHECK_THROWS_AS(generate_map(Archetype::SimpleLoop, p, 1), std::invalid_argument);
  p = default_params(Archetype::SimpleLoop);
  p.checkpoints = 0;
  CHECK_THROWS_AS(generate_map(Archetype::SimpleLoop, p, 1), std::invalid_argument);
  p = default_params(Archetype::SimpleLoop);
  p.width = 100;
  p.height = 80;
  CHECK_THROWS_AS(generate_map(Archetype::SimpleLoop, p, 1), std::invalid_argument);
}

TEST_CASE("archetype names") {
  for (Archetype a : kAllArchetypes) CHECK(parse_archetype(to_string(a)) == a);
  CHECK_FALSE(parse_archetype("Oval").has_value());
}

TEST_CASE("save_track / load_track round-trip is byte-identical") {
  const fs::path dir = fixtures::temp_dir("track_io");
  for (Archetype a : kAllArchetypes) {
    const TrackMap t = generate_map(a, default_params(a), 7);
    const fs::path prefix = dir / std::string(to_string(a));
    save_track(t, prefix);
    const TrackMap back = load_track(prefix);
    CHECK(back == t);
    const fs::path again = dir / (std::string(to_string(a)) + "_again");
    save_track(back, again);
    CHECK(slurp(prefix.string() + ".pgm") == slurp(again.string() + ".pgm"));
    CHECK(slurp(prefix.string() + ".json") == slurp(again.string() + ".json"));
  }
}

TEST_CASE("hand-written 8x8 track loads") {
  const fs::path dir = fixtures::temp_dir("track_8x8");
  {
    std::ofstream pgm(dir / "t.pgm", std::ios::binary);
    pgm << "P5\n# hand made\n8 8\n255\n";
    for (int y = 0; y < 8; ++y) {
      for (int x = 0; x < 8; ++x) pgm.put(static_cast<char>(x >= 1 && x <= 6 && y >= 1 && y <= 6 ? 255 : 0));
    }
    std::ofstream meta(dir / "t.json");
    meta << R"({"name": "tiny", "width": 8, "height": 8,
      "start": {"x": 2.5, "y": 2.5, "angle": 0},
      "checkpoints": [{"x": 4.5, "y": 4.5, "radius": 1.0}],
      "finish": {"x1": 1, "y1": 6, "x2": 6, "y2": 6}})";
  }
  const TrackMap t = load_track(dir / "t.pgm", dir / "t.json");
  CHECK(t.grid.width() == 8);
  CHECK(t.grid.drivable_count() == 36);
  CHECK(t.checkpoints.size() == 1);
  CHECK(t.name == "tiny");
}

TEST_CASE("load_track rejects bad inputs") {
  const fs::path dir = fixtures::temp_dir("track_bad");
  const TrackMap t = fixtures::vertical_corridor();
  save_track(t, dir / "ok");

  auto meta_with = [&](const std::string& from, const std::string& to) {
    std::string m = slurp(dir / "ok.json");
    const auto at = m.find(from);
    REQUIRE(at != std::string::npos);
    m.replace(at, from.size(), to);
    std::ofstream(dir / "bad.json", std::ios::binary) << m;
    return dir / "bad.json";
  };

  SUBCASE("start on a wall cell") {
    CHECK_THROWS_AS(load_track(dir / "ok.pgm", meta_with("\"x\": 50.0", "\"x\": 2.0")),
                    std::invalid_argument);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(load_track(dir / "ok.pgm", meta_with("\"width\": 101", "\"width\": 102")),
                    std::runtime_error);
  }
  SUBCASE("missing field") {
    CHECK_THROWS_AS(load_track(dir / "ok.pgm", meta_with("\"finish\"", "\"finnish\"")),
                    std::runtime_error);
  }
  SUBCASE("truncated raster") {
    std::string pgm = slurp(dir / "ok.pgm");
    pgm.resize(pgm.size() - 10);
    std::ofstream(dir / "short.pgm", std::ios::binary) << pgm;
    CHECK_THROWS_AS(load_track(dir / "short.pgm", dir / "ok.json"), std::runtime_error);
  }
  SUBCASE("not a PGM") {
    std::ofstream(dir / "text.pgm", std::ios::binary) << "P2\n1 1\n255\n0\n";
    CHECK_THROWS_AS(load_track(dir / "text.pgm", dir / "ok.json"), std::runtime_error);
  }
  SUBCASE("missing files") {
    CHECK_THROWS_AS(load_track(dir / "nope"), std::runtime_error);
  }
}
