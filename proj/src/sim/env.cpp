#include "autodrive/sim/env.hpp"

#include <stdexcept>

namespace autodrive::sim {

CarState initial_state(const TrackMap& track, const EnvConfig& cfg) {
  CarState car;
  car.pose = track.start;
  car.speed = cfg.speed_min;
  return car;
}

std::pair<RadarReading, CarState> reset(const TrackMap& track, const EnvConfig& cfg) {
  CarState car = initial_state(track, cfg);
  return {sense(track, car, cfg), car};
}

StepResult step(const TrackMap& track, const CarState& car, const EnvConfig& cfg,
                Action action) {
  if (!car.alive) throw std::logic_error("step called on a crashed car");
  if (car.steps >= cfg.max_steps) throw std::logic_error("step called on a truncated episode");

  StepResult out;
  out.car = apply_action(car, action, cfg, track.extent());
  CarState& next = out.car;
  StepEvents& ev = out.events;

  if (collided(track.grid, next, cfg)) {
    next.alive = false;
    ev.crashed = true;
  }

  const Vec2 from{car.pose.x, car.pose.y};
  const Vec2 to{next.pose.x, next.pose.y};
  const int n = static_cast<int>(track.checkpoints.size());

  // The swept center path is tested so a fast car cannot jump over a circle.
  if (next.next_checkpoint < n) {
    const Checkpoint& cp = track.checkpoints[static_cast<std::size_t>(next.next_checkpoint)];
    if (point_segment_distance(cp.center, from, to) <= cp.radius) {
      ev.crossed_checkpoint = true;
      next.next_checkpoint += 1;
    }
  }
  if (next.next_checkpoint == n && !(from == to) &&
      segments_intersect(from, to, track.finish.a, track.finish.b)) {
    ev.crossed_finish = true;
    next.laps_completed += 1;
    next.next_checkpoint = 0;
  }

  if (!ev.crashed && next.steps >= cfg.max_steps) ev.truncated = true;

  out.radar = sense(track, next, cfg);
  return out;
}

Environment::Environment(std::shared_ptr<const TrackMap> track, EnvConfig cfg)
    : track_(std::move(track)), cfg_(cfg) {
  if (!track_) throw std::invalid_argument("environment needs a track");
  cfg_.validate();
  car_ = initial_state(*track_, cfg_);
}

RadarReading Environment::reset() {
  auto [radar, car] = sim::reset(*track_, cfg_);
  car_ = car;
  return radar;
}

StepResult Environment::step(Action action) {
  StepResult r = sim::step(*track_, car_, cfg_, action);
  car_ = r.car;
  return r;
}

}  // namespace autodrive::sim
