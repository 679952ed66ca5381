#pragma once

#include <array>
#include <functional>
#include <span>

#include "autodrive/neat/genome.hpp"
#include "autodrive/neat/population.hpp"
#include "autodrive/sim/env.hpp"

namespace autodrive::neat {

// Output order of the driving network.
inline constexpr std::array<sim::Action, 4> kOutputActions = {
    sim::Action::TurnLeft, sim::Action::TurnRight, sim::Action::SpeedUp, sim::Action::SlowDown};

// Argmax, ties to the lowest index. Throws std::invalid_argument unless
// exactly four outputs are given.
sim::Action action_from_outputs(std::span<const double> outputs);

struct DriveTrace {
  double distance = 0.0;
  double speed_sum = 0.0;  // post-step speed summed over steps
  int steps = 0;
  int laps = 0;
  int checkpoints_hit = 0;
  bool crashed = false;

  double mean_speed() const { return steps > 0 ? speed_sum / steps : 0.0; }
};

using DrivingPolicy = std::function<sim::Action(const sim::RadarReading&, const sim::CarState&)>;

// Drives one episode from reset until a crash, lap_limit laps or max_steps.
DriveTrace drive_episode(const sim::TrackMap& track, const sim::EnvConfig& env_cfg,
                         const DrivingPolicy& policy, int lap_limit);

inline constexpr double kFitnessScale = 1e-6;

// distance * mean speed * 1e-6
double driving_fitness(const DriveTrace& trace);

// Radar normalized by radar_max feeds the phenotype; the argmax output picks
// the action.
DriveTrace drive_genome(const Genome& g, const sim::TrackMap& track, const sim::EnvConfig& env_cfg,
                        int lap_limit = 3);

// Assigns and returns driving_fitness of one deterministic episode.
double evaluate_genome(Genome& g, const sim::TrackMap& track, const sim::EnvConfig& env_cfg,
                       int lap_limit = 3);

RunResult run_neat(const sim::TrackMap& track, const NeatConfig& cfg,
                   const sim::EnvConfig& env_cfg, const GenerationCallback& on_generation = {});

}  // namespace autodrive::neat
