#include "autodrive/qlearn/agent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace autodrive::qlearn {

std::string_view to_string(Terminal t) { return t == Terminal::Crashed ? "Crashed" : "Truncated"; }

StateIndex discretize(const sim::RadarReading& radar, double r_max, int buckets) {
  if (!(r_max > 0.0)) throw std::invalid_argument("r_max must be positive");
  if (buckets < 1) throw std::invalid_argument("buckets must be positive");
  StateIndex s{};
  for (std::size_t i = 0; i < radar.distances.size(); ++i) {
    const double d = radar.distances[i];
    if (!std::isfinite(d) || d < 0.0) {
      throw std::invalid_argument("radar distance " + std::to_string(d) + " is not a valid reading");
    }
    const double b = std::floor(d / r_max * buckets);
    s[i] = static_cast<int>(std::min(b, static_cast<double>(buckets - 1)));
  }
  return s;
}

int greedy_action(const QTable& q, const StateIndex& s) {
  const auto row = q.row(s);
  // max_element returns the first maximum, i.e. the lowest index on ties.
  return static_cast<int>(std::max_element(row.begin(), row.end()) - row.begin());
}

int select_action(const QTable& q, const StateIndex& s, double epsilon, Rng& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(rng) < epsilon) {
    std::uniform_int_distribution<int> pick(0, q.action_count() - 1);
    return pick(rng);
  }
  return greedy_action(q, s);
}

void update_q(QTable& q, const StateIndex& s, int a, double r, const StateIndex& s_next,
              double alpha, double gamma, bool terminal) {
  if (!std::isfinite(r)) throw std::invalid_argument("reward must be finite");
  double bootstrap = 0.0;
  if (!terminal) {
    const auto next = q.row(s_next);
    bootstrap = *std::max_element(next.begin(), next.end());
  }
  double& cell = q.at(s, a);
  cell += alpha * (r + gamma * bootstrap - cell);
}

double step_reward(const sim::StepEvents& events, const sim::CarState& car) {
  double r = 0.0;
  if (events.crossed_checkpoint) r += kCheckpointReward;
  if (events.crossed_finish) r += kFinishBonus;
  if (events.crashed) r += kCrashPenalty + car.distance / kCrashDistanceDivisor;
  return r;
}

double decay(double value, double factor, double floor) { return std::max(value * factor, floor); }

TrainResult train(const sim::TrackMap& track, const QConfig& cfg, const sim::EnvConfig& env_cfg,
                  const EpisodeCallback& on_episode) {
  sim::EnvConfig e = env_cfg;
  e.max_steps = cfg.max_steps;
  DrivingQEnv env(track, e, cfg.buckets, cfg.action_set);
  return train_on(env, cfg, on_episode);
}

std::vector<EpisodeRecord> evaluate(const QTable& q, const sim::TrackMap& track,
                                    const QConfig& cfg, const sim::EnvConfig& env_cfg) {
  sim::EnvConfig e = env_cfg;
  e.max_steps = cfg.max_steps;
  DrivingQEnv env(track, e, cfg.buckets, cfg.action_set);
  if (q.buckets() != cfg.buckets || q.action_count() != env.action_count()) {
    throw std::invalid_argument("Q-table shape does not match the evaluation config");
  }
  return evaluate_on(q, env, cfg);
}

}  // namespace autodrive::qlearn
