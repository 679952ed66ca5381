#include "autodrive/sim/car.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "autodrive/sim/geometry.hpp"

namespace autodrive::sim {

namespace {
constexpr std::array<std::string_view, 6> kActionNames = {
    "SpeedUp", "TurnLeft", "TurnRight", "SlowDown", "LeftSpeedUp", "RightSpeedUp"};
}  // namespace

std::string_view to_string(Action action) {
  return kActionNames[static_cast<std::size_t>(action)];
}

std::optional<Action> parse_action(std::string_view name) {
  for (std::size_t i = 0; i < kActionNames.size(); ++i) {
    if (kActionNames[i] == name) return kAllActions[i];
  }
  return std::nullopt;
}

void EnvConfig::validate() const {
  if (max_steps <= 0) throw std::invalid_argument("max_steps must be positive");
  if (!(turn_step > 0.0) || !(speed_step > 0.0)) {
    throw std::invalid_argument("turn_step and speed_step must be positive");
  }
  if (!(speed_min > 0.0) || !(speed_min < speed_max)) {
    throw std::invalid_argument("speed limits must satisfy 0 < speed_min < speed_max");
  }
  if (!(radar_max > 0.0)) throw std::invalid_argument("radar_max must be positive");
  if (!(car_half_length > 0.0) || !(car_half_width > 0.0)) {
    throw std::invalid_argument("car half extents must be positive");
  }
}

double normalize_angle(double deg) {
  double a = std::fmod(deg, 360.0);
  if (a < 0.0) a += 360.0;
  if (a >= 360.0) a -= 360.0;
  return a;
}

CarState apply_action(const CarState& car, Action action, const EnvConfig& cfg,
                      Extent bounds) {
  CarState next = car;
  auto speed_up = [&] { next.speed = std::min(next.speed + cfg.speed_step, cfg.speed_max); };

  switch (action) {
    case Action::SpeedUp:
      speed_up();
      break;
    case Action::TurnLeft:
      next.pose.angle += cfg.turn_step;
      break;
    case Action::TurnRight:
      next.pose.angle -= cfg.turn_step;
      break;
    case Action::SlowDown:
      if (next.speed > cfg.speed_min) {
        next.speed = std::max(next.speed - cfg.speed_step, cfg.speed_min);
      }
      break;
    case Action::LeftSpeedUp:
      next.pose.angle += cfg.turn_step;
      speed_up();
      break;
    case Action::RightSpeedUp:
      next.pose.angle -= cfg.turn_step;
      speed_up();
      break;
  }
  next.pose.angle = normalize_angle(next.pose.angle);

  if (!is_pure_turn(action)) {
    const Vec2 dir = heading_vector(next.pose.angle);
    next.pose.x = std::clamp(next.pose.x + dir.x * next.speed, 0.0,
                             static_cast<double>(bounds.width - 1));
    next.pose.y = std::clamp(next.pose.y + dir.y * next.speed, 0.0,
                             static_cast<double>(bounds.height - 1));
    next.distance += next.speed;
  }
  next.steps += 1;
  return next;
}

}  // namespace autodrive::sim
