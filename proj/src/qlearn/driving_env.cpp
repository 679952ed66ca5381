#include <stdexcept>

#include "autodrive/qlearn/agent.hpp"

namespace autodrive::qlearn {

DrivingQEnv::DrivingQEnv(const sim::TrackMap& track, sim::EnvConfig env_cfg, int buckets,
                         ActionSet set)
    : track_(&track), cfg_(env_cfg), buckets_(buckets), actions_(actions_of(set)) {
  cfg_.validate();
  car_ = sim::initial_state(track, cfg_);
}

StateIndex DrivingQEnv::reset() {
  auto [radar, car] = sim::reset(*track_, cfg_);
  car_ = car;
  checkpoints_hit_ = 0;
  last_ = sim::StepResult{radar, car, {}};
  return discretize(radar, cfg_.radar_max, buckets_);
}

QTransition DrivingQEnv::step(int action) {
  if (action < 0 || action >= action_count()) {
    throw std::out_of_range("action index outside the configured action set");
  }
  last_ = sim::step(*track_, car_, cfg_, actions_[static_cast<std::size_t>(action)]);
  car_ = last_.car;
  if (last_.events.crossed_checkpoint) ++checkpoints_hit_;
  return QTransition{discretize(last_.radar, cfg_.radar_max, buckets_),
                     step_reward(last_.events, car_), last_.events.crashed,
                     last_.events.truncated};
}

void DrivingQEnv::annotate(EpisodeRecord& rec) const {
  rec.distance = car_.distance;
  rec.checkpoints_hit = checkpoints_hit_;
  rec.laps = car_.laps_completed;
}

}  // namespace autodrive::qlearn
