#include "autodrive/qlearn/config.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace autodrive::qlearn {

namespace {
using sim::Action;
constexpr std::array<Action, 6> kSix = {Action::SpeedUp,  Action::TurnLeft,    Action::TurnRight,
                                        Action::SlowDown, Action::LeftSpeedUp, Action::RightSpeedUp};
constexpr std::array<Action, 3> kThree = {Action::TurnLeft, Action::TurnRight, Action::SpeedUp};

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("invalid QConfig: ") + what);
}
}  // namespace

std::span<const sim::Action> actions_of(ActionSet set) {
  if (set == ActionSet::Three) return kThree;
  return kSix;
}

std::string_view to_string(ActionSet set) { return set == ActionSet::Three ? "Three" : "Six"; }

std::optional<ActionSet> parse_action_set(std::string_view name) {
  if (name == "Six") return ActionSet::Six;
  if (name == "Three") return ActionSet::Three;
  return std::nullopt;
}

void QConfig::validate() const {
  require(episodes_train >= 0, "episodes_train < 0");
  require(episodes_eval >= 0, "episodes_eval < 0");
  require(max_steps > 0, "max_steps must be positive");
  require(0.0 <= epsilon_min && epsilon_min <= epsilon0 && epsilon0 <= 1.0,
          "need 0 <= epsilon_min <= epsilon0 <= 1");
  require(0.0 < lr_min && lr_min <= lr0 && lr0 <= 1.0, "need 0 < lr_min <= lr0 <= 1");
  require(0.0 <= gamma && gamma <= 1.0, "gamma outside [0, 1]");
  require(0.0 < epsilon_decay && epsilon_decay <= 1.0, "epsilon_decay outside (0, 1]");
  require(0.0 < lr_decay && lr_decay <= 1.0, "lr_decay outside (0, 1]");
  require(0.0 <= eval_epsilon && eval_epsilon <= 1.0, "eval_epsilon outside [0, 1]");
  require(buckets >= 2, "buckets < 2");
}

void to_json(nlohmann::json& j, const QConfig& c) {
  j = nlohmann::json{{"episodes_train", c.episodes_train},
                     {"episodes_eval", c.episodes_eval},
                     {"max_steps", c.max_steps},
                     {"epsilon0", c.epsilon0},
                     {"epsilon_min", c.epsilon_min},
                     {"lr0", c.lr0},
                     {"lr_min", c.lr_min},
                     {"gamma", c.gamma},
                     {"epsilon_decay", c.epsilon_decay},
                     {"lr_decay", c.lr_decay},
                     {"eval_epsilon", c.eval_epsilon},
                     {"buckets", c.buckets},
                     {"action_set", std::string(to_string(c.action_set))},
                     {"seed", c.seed}};
}

void from_json(const nlohmann::json& j, QConfig& c) {
  if (!j.is_object()) throw std::invalid_argument("QConfig must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "episodes_train") c.episodes_train = value.get<int>();
    else if (key == "episodes_eval") c.episodes_eval = value.get<int>();
    else if (key == "max_steps") c.max_steps = value.get<int>();
    else if (key == "epsilon0") c.epsilon0 = value.get<double>();
    else if (key == "epsilon_min") c.epsilon_min = value.get<double>();
    else if (key == "lr0") c.lr0 = value.get<double>();
    else if (key == "lr_min") c.lr_min = value.get<double>();
    else if (key == "gamma") c.gamma = value.get<double>();
    else if (key == "epsilon_decay") c.epsilon_decay = value.get<double>();
    else if (key == "lr_decay") c.lr_decay = value.get<double>();
    else if (key == "eval_epsilon") c.eval_epsilon = value.get<double>();
    else if (key == "buckets") c.buckets = value.get<int>();
    else if (key == "seed") c.seed = value.get<std::uint64_t>();
    else if (key == "action_set") {
      auto set = parse_action_set(value.get<std::string>());
      if (!set) throw std::invalid_argument("unknown action_set '" + value.get<std::string>() + "'");
      c.action_set = *set;
    } else {
      throw std::invalid_argument("unknown QConfig field '" + key + "'");
    }
  }
  c.validate();
}

}  // namespace autodrive::qlearn
