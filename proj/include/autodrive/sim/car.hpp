#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace autodrive::sim {

enum class Action : std::uint8_t {
  SpeedUp,
  TurnLeft,
  TurnRight,
  SlowDown,
  LeftSpeedUp,
  RightSpeedUp,
};

inline constexpr std::array<Action, 6> kAllActions = {
    Action::SpeedUp,  Action::TurnLeft,    Action::TurnRight,
    Action::SlowDown, Action::LeftSpeedUp, Action::RightSpeedUp,
};

std::string_view to_string(Action action);
std::optional<Action> parse_action(std::string_view name);

// Pure turns rotate in place; every other action moves the car.
constexpr bool is_pure_turn(Action a) {
  return a == Action::TurnLeft || a == Action::TurnRight;
}

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double angle = 0.0;  // degrees, multiple of turn_step, in [0, 360)
  bool operator==(const Pose&) const = default;
};

struct CarState {
  Pose pose;
  double speed = 10.0;
  double distance = 0.0;
  bool alive = true;
  int next_checkpoint = 0;
  int laps_completed = 0;
  int steps = 0;
  bool operator==(const CarState&) const = default;
};

struct EnvConfig {
  int max_steps = 2000;
  double turn_step = 15.0;
  double speed_step = 2.0;
  double speed_min = 10.0;
  double speed_max = 20.0;
  double radar_max = 300.0;
  // (length / 2, width / 2) of the collision rectangle.
  double car_half_length = 10.0;
  double car_half_width = 5.0;

  double car_width() const { return 2.0 * car_half_width; }
  // Throws std::invalid_argument on inconsistent limits.
  void validate() const;
  bool operator==(const EnvConfig&) const = default;
};

struct Extent {
  int width = 0;
  int height = 0;
};

// Wraps an angle in degrees into [0, 360).
double normalize_angle(double deg);

// One discrete kinematic update. Turns change the heading by turn_step,
// speed changes are clamped to [speed_min, speed_max] and moving actions
// displace the car by its post-update speed along the post-update heading.
// The resulting position is clamped to [0, width - 1] x [0, height - 1].
CarState apply_action(const CarState& car, Action action, const EnvConfig& cfg,
                      Extent bounds);

}  // namespace autodrive::sim
