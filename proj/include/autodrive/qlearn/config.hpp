#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "json.hpp"

#include "autodrive/sim/car.hpp"

namespace autodrive::qlearn {

// Six: the full action list. Three: {TurnLeft, TurnRight, SpeedUp}, which
// gives the (11, 11, 11, 11, 11, 3) table shape.
enum class ActionSet { Six, Three };

std::span<const sim::Action> actions_of(ActionSet set);
std::string_view to_string(ActionSet set);
std::optional<ActionSet> parse_action_set(std::string_view name);

struct QConfig {
  int episodes_train = 30000;
  int episodes_eval = 100;
  int max_steps = 2000;
  double epsilon0 = 0.8;
  double epsilon_min = 0.001;
  double lr0 = 0.8;
  double lr_min = 0.4;
  double gamma = 0.99;
  double epsilon_decay = 0.9995;
  double lr_decay = 0.99985;
  double eval_epsilon = 0.01;
  int buckets = 11;
  ActionSet action_set = ActionSet::Six;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument on out-of-range fields.
  void validate() const;
  bool operator==(const QConfig&) const = default;
};

// Unknown keys are rejected; missing keys keep their defaults.
void to_json(nlohmann::json& j, const QConfig& cfg);
void from_json(const nlohmann::json& j, QConfig& cfg);

}  // namespace autodrive::qlearn
