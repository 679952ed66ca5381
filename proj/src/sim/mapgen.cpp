#include "autodrive/sim/mapgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace autodrive::sim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kRawSamples = 4096;

struct Frame {
  double cx, cy;  // loop center
  double ax, ay;  // half extents available to the centerline
};

// Superellipse shaping: exponent 2 is an ellipse, larger exponents flatten
// the sides into straights joined by tighter corners.
Vec2 shaped_point(const Frame& f, double theta, double rho, double straight_fraction) {
  const double p = 2.0 + 6.0 * std::clamp(straight_fraction, 0.0, 1.0);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double ex = std::copysign(std::pow(std::abs(c), 2.0 / p), c);
  const double ey = std::copysign(std::pow(std::abs(s), 2.0 / p), s);
  return {f.cx + f.ax * rho * ex, f.cy + f.ay * rho * ey};
}

// Angles start at the bottom of the loop and increase, which in raster
// coordinates runs the lap clockwise on screen.
double sample_theta(int i, int n) { return kPi / 2.0 + 2.0 * kPi * i / n; }

std::vector<Vec2> radial_curve(const Frame& f, const MapParams& p,
                               const std::vector<double>& rho) {
  std::vector<Vec2> pts;
  pts.reserve(rho.size());
  const int n = static_cast<int>(rho.size());
  for (int i = 0; i < n; ++i) {
    pts.push_back(shaped_point(f, sample_theta(i, n), rho[static_cast<std::size_t>(i)],
                               p.straight_fraction));
  }
  return pts;
}

// Rescale a radius profile so its maximum is 1 (the loop must fit the frame).
void normalize_profile(std::vector<double>& rho) {
  const double peak = *std::max_element(rho.begin(), rho.end());
  for (double& r : rho) r /= peak;
}

std::vector<Vec2> simple_loop(const Frame& f, const MapParams& p) {
  return radial_curve(f, p, std::vector<double>(kRawSamples, 1.0));
}

std::vector<Vec2> curved_loop(const Frame& f, const MapParams& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> weight(0.6, 1.0);
  const int base = std::max(2, p.turns);
  const double amp = 0.16 * p.sharpness;
  const double w1 = weight(rng), w2 = weight(rng) * 0.5;
  const double ph1 = phase(rng), ph2 = phase(rng);
  std::vector<double> rho(kRawSamples);
  for (int i = 0; i < kRawSamples; ++i) {
    const double t = 2.0 * kPi * i / kRawSamples;
    rho[static_cast<std::size_t>(i)] =
        1.0 + amp * (w1 * std::sin(base * t + ph1) + w2 * std::sin((base + 1) * t + ph2));
  }
  normalize_profile(rho);
  return radial_curve(f, p, rho);
}

std::vector<Vec2> constant_twists(const Frame& f, const MapParams& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  const int k = std::max(3, p.turns);
  const double amp = 0.12 * p.sharpness;
  const double ph = phase(rng);
  std::vector<double> rho(kRawSamples);
  for (int i = 0; i < kRawSamples; ++i) {
    const double t = 2.0 * kPi * i / kRawSamples;
    rho[static_cast<std::size_t>(i)] = 1.0 + amp * std::sin(k * t + ph);
  }
  normalize_profile(rho);
  return radial_curve(f, p, rho);
}

// Chaikin corner cutting on a closed polygon.
std::vector<Vec2> chaikin(const std::vector<Vec2>& poly, int iterations) {
  std::vector<Vec2> cur = poly;
  for (int it = 0; it < iterations; ++it) {
    std::vector<Vec2> next;
    next.reserve(cur.size() * 2);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const Vec2 a = cur[i];
      const Vec2 b = cur[(i + 1) % cur.size()];
      next.push_back(a * 0.75 + b * 0.25);
      next.push_back(a * 0.25 + b * 0.75);
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<Vec2> sharp_turns(const Frame& f, const MapParams& p, std::mt19937_64& rng) {
  const int n = std::max(4, p.turns);
  std::uniform_real_distribution<double> radius(0.62, 1.0);
  std::uniform_real_distribution<double> jitter(-0.18, 0.18);
  std::vector<Vec2> poly;
  // The first vertex sits on the bottom of the loop so the start line lands
  // on a straight once the polygon is rotated to begin mid-edge.
  for (int i = 0; i < n; ++i) {
    const double step = 2.0 * kPi / n;
    const double theta = kPi / 2.0 + step * (i + 0.5 + jitter(rng));
    poly.push_back(shaped_point(f, theta, radius(rng), p.straight_fraction));
  }
  const int iterations = std::clamp(static_cast<int>(std::lround(3.0 - 2.0 * p.sharpness)), 1, 4);
  std::vector<Vec2> smooth = chaikin(poly, iterations);
  // Begin at the midpoint of the edge between the last and first vertex.
  std::vector<Vec2> out;
  out.reserve(smooth.size() + 1);
  out.push_back((smooth.back() + smooth.front()) * 0.5);
  out.insert(out.end(), smooth.begin(), smooth.end());
  return out;
}

// Uniform arc-length resampling of a closed polyline. The result does not
// repeat its first point.
std::vector<Vec2> resample_closed(const std::vector<Vec2>& pts, double spacing) {
  std::vector<double> cum(pts.size() + 1, 0.0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    cum[i + 1] = cum[i] + norm(pts[(i + 1) % pts.size()] - pts[i]);
  }
  const double total = cum.back();
  const auto count = static_cast<std::size_t>(std::max(8.0, std::floor(total / spacing)));
  const double ds = total / static_cast<double>(count);
  std::vector<Vec2> out;
  out.reserve(count);
  std::size_t seg = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const double s = ds * static_cast<double>(k);
    while (seg + 1 < pts.size() && cum[seg + 1] < s) ++seg;
    const Vec2 a = pts[seg];
    const Vec2 b = pts[(seg + 1) % pts.size()];
    const double len = cum[seg + 1] - cum[seg];
    const double t = len > 0.0 ? (s - cum[seg]) / len : 0.0;
    out.push_back(a + (b - a) * t);
  }
  return out;
}

void stamp_corridor(std::vector<std::uint8_t>& cells, int width, int height,
                    const std::vector<Vec2>& centerline, double half_width) {
  const int r = static_cast<int>(std::ceil(half_width));
  const double r2 = half_width * half_width;
  for (const Vec2& c : centerline) {
    const int cx = static_cast<int>(std::floor(c.x));
    const int cy = static_cast<int>(std::floor(c.y));
    for (int y = std::max(0, cy - r); y <= std::min(height - 1, cy + r); ++y) {
      const double dy = y + 0.5 - c.y;
      for (int x = std::max(0, cx - r); x <= std::min(width - 1, cx + r); ++x) {
        const double dx = x + 0.5 - c.x;
        if (dx * dx + dy * dy <= r2) {
          cells[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                static_cast<std::size_t>(x)] = 1;
        }
      }
    }
  }
}

double heading_from_tangent(Vec2 t) {
  // Inverse of heading_vector: direction (-sin a, cos a).
  const double deg = std::atan2(-t.x, t.y) * 180.0 / kPi;
  return normalize_angle(std::round(deg / 15.0) * 15.0);
}

void check_params(const MapParams& p) {
  if (p.width <= 0 || p.height <= 0) {
    throw std::invalid_argument("map dimensions must be positive");
  }
  if (p.checkpoints < 1) {
    throw std::invalid_argument("map needs at least one checkpoint, got " +
                                std::to_string(p.checkpoints));
  }
  if (!(p.car_width > 0.0)) throw std::invalid_argument("car width must be positive");
  if (p.track_width < 3.0 * p.car_width) {
    throw std::invalid_argument("track width " + std::to_string(p.track_width) +
                                " is narrower than three car widths");
  }
  if (!(p.scale > 0.0 && p.scale <= 1.0)) {
    throw std::invalid_argument("map scale must lie in (0, 1]");
  }
  if (!(p.sharpness >= 0.0)) throw std::invalid_argument("sharpness must be non-negative");
}

}  // namespace

std::string_view to_string(Archetype a) {
  switch (a) {
    case Archetype::SimpleLoop: return "SimpleLoop";
    case Archetype::CurvedLoop: return "CurvedLoop";
    case Archetype::SharpTurns: return "SharpTurns";
    case Archetype::ConstantTwists: return "ConstantTwists";
  }
  return "?";
}

std::optional<Archetype> parse_archetype(std::string_view name) {
  for (Archetype a : kAllArchetypes) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

MapParams default_params(Archetype a) {
  MapParams p;
  switch (a) {
    case Archetype::SimpleLoop:
      break;
    case Archetype::CurvedLoop:
      p.track_width = 110.0;
      p.checkpoints = 8;
      p.turns = 2;
      p.straight_fraction = 0.1;
      break;
    case Archetype::SharpTurns:
      p.straight_fraction = 0.0;
      p.track_width = 100.0;
      p.checkpoints = 8;
      p.turns = 7;
      break;
    case Archetype::ConstantTwists:
      p.straight_fraction = 0.0;
      p.track_width = 90.0;
      p.checkpoints = 8;
      p.turns = 10;
      break;
  }
  return p;
}

std::vector<Vec2> generate_centerline(Archetype a, const MapParams& p, std::uint64_t seed) {
  check_params(p);
  const double half = p.track_width / 2.0;
  Frame f{p.width / 2.0, p.height / 2.0, (p.width / 2.0 - p.margin - half) * p.scale,
          (p.height / 2.0 - p.margin - half) * p.scale};
  if (f.ax < p.track_width || f.ay < p.track_width) {
    throw std::invalid_argument("loop does not fit a " + std::to_string(p.width) + "x" +
                                std::to_string(p.height) + " raster at this track width");
  }
  std::mt19937_64 rng(seed);
  std::vector<Vec2> raw;
  switch (a) {
    case Archetype::SimpleLoop: raw = simple_loop(f, p); break;
    case Archetype::CurvedLoop: raw = curved_loop(f, p, rng); break;
    case Archetype::SharpTurns: raw = sharp_turns(f, p, rng); break;
    case Archetype::ConstantTwists: raw = constant_twists(f, p, rng); break;
  }
  return resample_closed(raw, 1.0);
}

TrackMap generate_map(Archetype a, const MapParams& p, std::uint64_t seed) {
  const std::vector<Vec2> center = generate_centerline(a, p, seed);
  const double half = p.track_width / 2.0;

  std::vector<std::uint8_t> cells(static_cast<std::size_t>(p.width) *
                                      static_cast<std::size_t>(p.height),
                                  0);
  stamp_corridor(cells, p.width, p.height, center, half);

  TrackMap track;
  track.name = std::string(to_string(a));
  track.grid = OccupancyGrid(p.width, p.height, std::move(cells));

  const std::size_t n = center.size();
  const Vec2 tangent = center[1] - center[n - 1];
  const Vec2 unit = tangent * (1.0 / norm(tangent));
  const Vec2 normal{-unit.y, unit.x};
  const Vec2 s0 = center[0];
  track.start = Pose{std::round(s0.x), std::round(s0.y), heading_from_tangent(tangent)};
  track.finish = Segment{s0 + normal * half, s0 - normal * half};

  // Checkpoints sit mid-way along n equal arcs so the last one precedes the
  // finish line by half an interval.
  for (int k = 0; k < p.checkpoints; ++k) {
    const double frac = (k + 0.5) / p.checkpoints;
    const auto idx = std::min(n - 1, static_cast<std::size_t>(frac * static_cast<double>(n)));
    const Vec2 c = center[idx];
    track.checkpoints.push_back(
        Checkpoint{Vec2{std::round(c.x), std::round(c.y)}, 0.6 * p.track_width, k});
  }
  track.validate();
  return track;
}

}  // namespace autodrive::sim
