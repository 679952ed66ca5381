#pragma once

#include <memory>
#include <utility>

#include "autodrive/sim/car.hpp"
#include "autodrive/sim/radar.hpp"
#include "autodrive/sim/track.hpp"

namespace autodrive::sim {

struct StepEvents {
  bool crossed_checkpoint = false;
  bool crossed_finish = false;
  bool crashed = false;
  bool truncated = false;
  bool operator==(const StepEvents&) const = default;
};

struct StepResult {
  RadarReading radar;
  CarState car;
  StepEvents events;
};

CarState initial_state(const TrackMap& track, const EnvConfig& cfg);

std::pair<RadarReading, CarState> reset(const TrackMap& track, const EnvConfig& cfg);

// Advances one step. Throws std::logic_error when the car is dead or the
// episode already hit max_steps.
StepResult step(const TrackMap& track, const CarState& car, const EnvConfig& cfg,
                Action action);

// Owns one episode over a shared, immutable track.
class Environment {
 public:
  Environment(std::shared_ptr<const TrackMap> track, EnvConfig cfg);

  RadarReading reset();
  StepResult step(Action action);

  bool done() const { return !car_.alive || car_.steps >= cfg_.max_steps; }
  const CarState& car() const { return car_; }
  const TrackMap& track() const { return *track_; }
  const EnvConfig& config() const { return cfg_; }

 private:
  std::shared_ptr<const TrackMap> track_;
  EnvConfig cfg_;
  CarState car_;
};

}  // namespace autodrive::sim
