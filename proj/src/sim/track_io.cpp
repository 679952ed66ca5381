#include "autodrive/sim/track_io.hpp"

#include <fstream>
#include <sstream>
#include <cctype>
#include <stdexcept>

#include "json.hpp"

namespace autodrive::sim {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_token(std::istream& in) {
  std::string tok;
  while (in) {
    const int c = in.peek();
    if (c == '#') {
      std::string comment;
      std::getline(in, comment);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      break;
    }
  }
  in >> tok;
  return tok;
}

int parse_positive(const std::string& tok, const fs::path& path) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used == tok.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw std::runtime_error(path.string() + ": bad PGM header field '" + tok + "'");
}

double number_field(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number()) {
    throw std::runtime_error(where + ": missing or non-numeric field '" + key + "'");
  }
  return obj.at(key).get<double>();
}

}  // namespace

void write_pgm(const OccupancyGrid& grid, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "P5\n" << grid.width() << ' ' << grid.height() << "\n255\n";
  std::string row;
  for (std::uint8_t c : grid.cells()) row.push_back(static_cast<char>(c ? 255 : 0));
  out.write(row.data(), static_cast<std::streamsize>(row.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

OccupancyGrid read_pgm(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  if (read_token(in) != "P5") throw std::runtime_error(path.string() + ": not a binary PGM (P5)");
  const int w = parse_positive(read_token(in), path);
  const int h = parse_positive(read_token(in), path);
  const int maxval = parse_positive(read_token(in), path);
  if (maxval > 255) throw std::runtime_error(path.string() + ": 16-bit PGM is not supported");
  in.get();  // single whitespace byte before the raster
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  in.read(reinterpret_cast<char*>(cells.data()), static_cast<std::streamsize>(cells.size()));
  if (in.gcount() != static_cast<std::streamsize>(cells.size())) {
    throw std::runtime_error(path.string() + ": raster shorter than " + std::to_string(w) + "x" +
                             std::to_string(h));
  }
  return OccupancyGrid(w, h, std::move(cells));
}

std::string track_meta_json(const TrackMap& track) {
  ordered_json j;
  j["name"] = track.name;
  j["width"] = track.grid.width();
  j["height"] = track.grid.height();
  j["start"] = {{"x", track.start.x}, {"y", track.start.y}, {"angle", track.start.angle}};
  ordered_json cps = ordered_json::array();
  for (const Checkpoint& cp : track.checkpoints) {
    cps.push_back({{"x", cp.center.x}, {"y", cp.center.y}, {"radius", cp.radius}});
  }
  j["checkpoints"] = std::move(cps);
  j["finish"] = {{"x1", track.finish.a.x},
                 {"y1", track.finish.a.y},
                 {"x2", track.finish.b.x},
                 {"y2", track.finish.b.y}};
  return j.dump(2) + "\n";
}

void save_track(const TrackMap& track, const fs::path& mask_path, const fs::path& meta_path) {
  write_pgm(track.grid, mask_path);
  std::ofstream out(meta_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + meta_path.string() + " for writing");
  out << track_meta_json(track);
}

TrackMap load_track(const fs::path& mask_path, const fs::path& meta_path) {
  OccupancyGrid grid = read_pgm(mask_path);

  std::ifstream in(meta_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + meta_path.string());
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(meta_path.string() + ": " + e.what());
  }
  const std::string where = meta_path.string();
  if (!j.is_object()) throw std::runtime_error(where + ": meta must be a JSON object");

  TrackMap t;
  if (!j.contains("name") || !j["name"].is_string()) {
    throw std::runtime_error(where + ": missing string field 'name'");
  }
  t.name = j["name"].get<std::string>();

  const double w = number_field(j, "width", where);
  const double h = number_field(j, "height", where);
  if (w != grid.width() || h != grid.height()) {
    throw std::runtime_error(where + ": meta declares " + std::to_string(static_cast<long>(w)) +
                             "x" + std::to_string(static_cast<long>(h)) + " but mask is " +
                             std::to_string(grid.width()) + "x" + std::to_string(grid.height()));
  }

  if (!j.contains("start")) throw std::runtime_error(where + ": missing 'start'");
  const auto& s = j["start"];
  t.start = Pose{number_field(s, "x", where), number_field(s, "y", where),
                 number_field(s, "angle", where)};

  if (!j.contains("checkpoints") || !j["checkpoints"].is_array()) {
    throw std::runtime_error(where + ": missing array 'checkpoints'");
  }
  int index = 0;
  for (const auto& cp : j["checkpoints"]) {
    t.checkpoints.push_back(Checkpoint{Vec2{number_field(cp, "x", where), number_field(cp, "y", where)},
                                       number_field(cp, "radius", where), index++});
  }

  if (!j.contains("finish")) throw std::runtime_error(where + ": missing 'finish'");
  const auto& f = j["finish"];
  t.finish = Segment{Vec2{number_field(f, "x1", where), number_field(f, "y1", where)},
                     Vec2{number_field(f, "x2", where), number_field(f, "y2", where)}};

  t.grid = std::move(grid);
  t.validate();
  return t;
}

TrackMap load_track(const fs::path& prefix) {
  return load_track(fs::path(prefix.string() + ".pgm"), fs::path(prefix.string() + ".json"));
}

void save_track(const TrackMap& track, const fs::path& prefix) {
  save_track(track, fs::path(prefix.string() + ".pgm"), fs::path(prefix.string() + ".json"));
}

}  // namespace autodrive::sim
