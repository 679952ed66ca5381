#include "autodrive/neat/evaluate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "autodrive/neat/phenotype.hpp"

namespace autodrive::neat {

sim::Action action_from_outputs(std::span<const double> outputs) {
  if (outputs.size() != kOutputActions.size()) {
    throw std::invalid_argument("expected 4 network outputs, got " + std::to_string(outputs.size()));
  }
  const auto best = std::max_element(outputs.begin(), outputs.end());
  return kOutputActions[static_cast<std::size_t>(best - outputs.begin())];
}

DriveTrace drive_episode(const sim::TrackMap& track, const sim::EnvConfig& env_cfg,
                         const DrivingPolicy& policy, int lap_limit) {
  DriveTrace trace;
  auto [radar, car] = sim::reset(track, env_cfg);
  while (car.alive && car.steps < env_cfg.max_steps && car.laps_completed < lap_limit) {
    const sim::StepResult r = sim::step(track, car, env_cfg, policy(radar, car));
    radar = r.radar;
    car = r.car;
    trace.steps += 1;
    trace.speed_sum += car.speed;
    if (r.events.crossed_checkpoint) trace.checkpoints_hit += 1;
    if (r.events.crashed) trace.crashed = true;
  }
  trace.distance = car.distance;
  trace.laps = car.laps_completed;
  return trace;
}

double driving_fitness(const DriveTrace& trace) {
  return trace.distance * trace.mean_speed() * kFitnessScale;
}

DriveTrace drive_genome(const Genome& g, const sim::TrackMap& track, const sim::EnvConfig& env_cfg,
                        int lap_limit) {
  const Phenotype net = Phenotype::build(g);
  std::array<double, 5> inputs{};
  return drive_episode(
      track, env_cfg,
      [&](const sim::RadarReading& radar, const sim::CarState&) {
        for (std::size_t i = 0; i < inputs.size(); ++i) {
          inputs[i] = radar.distances[i] / env_cfg.radar_max;
        }
        return action_from_outputs(net.activate(inputs));
      },
      lap_limit);
}

double evaluate_genome(Genome& g, const sim::TrackMap& track, const sim::EnvConfig& env_cfg,
                       int lap_limit) {
  const double f = driving_fitness(drive_genome(g, track, env_cfg, lap_limit));
  g.fitness = f;
  return f;
}

RunResult run_neat(const sim::TrackMap& track, const NeatConfig& cfg,
                   const sim::EnvConfig& env_cfg, const GenerationCallback& on_generation) {
  if (cfg.num_inputs != 5 || cfg.num_outputs != 4) {
    throw std::invalid_argument("the driving task needs 5 inputs and 4 outputs");
  }
  env_cfg.validate();
  return run_neat(
      cfg,
      [&](const Genome& g) { return driving_fitness(drive_genome(g, track, env_cfg, cfg.eval_lap_limit)); },
      on_generation);
}

}  // namespace autodrive::neat
