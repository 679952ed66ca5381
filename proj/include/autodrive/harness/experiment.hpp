#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "autodrive/neat/config.hpp"
#include "autodrive/qlearn/config.hpp"
#include "autodrive/sim/car.hpp"
#include "autodrive/sim/mapgen.hpp"
#include "autodrive/sim/track.hpp"

namespace autodrive::sim {
// Found by ADL from nlohmann::json; unknown keys are rejected.
void to_json(nlohmann::json& j, const EnvConfig& c);
void from_json(const nlohmann::json& j, EnvConfig& c);
}  // namespace autodrive::sim

namespace autodrive::harness {

namespace fs = std::filesystem;

// Applies the keys present in `j` on top of `c`; unknown keys throw.
void apply_map_params(const nlohmann::json& j, sim::MapParams& c);

struct ExperimentConfig {
  // Archetype name (SimpleLoop, ...) or a path prefix with .pgm/.json next to it.
  std::string map = "SimpleLoop";
  std::uint64_t map_seed = 7;
  nlohmann::json map_params = nlohmann::json::object();  // overrides for generated maps
  std::vector<std::uint64_t> seeds = {1};
  fs::path output_dir;
  sim::EnvConfig env;
  qlearn::QConfig q;
  neat::NeatConfig neat;

  void validate() const;
};

// Reads {"map", "map_seed", "map_params", "seeds", "env", "q", "neat"}; every
// key optional, unknown keys rejected with std::invalid_argument.
ExperimentConfig parse_experiment_config(const nlohmann::json& j);
ExperimentConfig load_experiment_config(const fs::path& path);

sim::TrackMap resolve_map(const std::string& map, std::uint64_t map_seed,
                          const nlohmann::json& overrides = nlohmann::json::object());

fs::path seed_dir(const fs::path& out, std::uint64_t seed);

struct QSeedSummary {
  std::uint64_t seed = 0;
  int train_episodes = 0;
  int eval_episodes = 0;
  double eval_mean_reward = 0.0;
  double eval_max_reward = 0.0;
  double checkpoint_completion_rate = 0.0;  // eval episodes that hit every checkpoint
  double lap_completion_rate = 0.0;         // eval episodes that crossed the finish
};

struct NeatSeedSummary {
  std::uint64_t seed = 0;
  int generations = 0;
  int population = 0;
  double best_fitness = 0.0;
  int best_laps = 0;
  bool completes_lap = false;
};

struct ExperimentSummary {
  std::string algorithm;  // "Q" or "NEAT"
  std::string map;
  std::vector<QSeedSummary> q;
  std::vector<NeatSeedSummary> neat;

  // Mean over seeds of the eval lap-completion rate (Q) or of the 0/1 lap
  // flag of the best genome (NEAT).
  double lap_completion_rate() const;
};

nlohmann::ordered_json summary_to_json(const ExperimentSummary& s);
ExperimentSummary summary_from_json(const nlohmann::json& j);
ExperimentSummary load_summary(const fs::path& path);

// Per seed, under <out>/seed_<n>/: train.csv, train_avg100.csv, eval.csv,
// qtable.bin, reward plots and timing.json. <out>/summary.json aggregates.
ExperimentSummary run_q_experiment(const ExperimentConfig& cfg, bool verbose = false);

// Per seed: generations.csv, species.csv, best_genome.json, fitness and
// species plots, timing.json; <out>/summary.json aggregates.
ExperimentSummary run_neat_experiment(const ExperimentConfig& cfg, bool verbose = false);

// Writes the text with a trailing newline; throws on I/O failure.
void write_text(const fs::path& path, const std::string& text);

}  // namespace autodrive::harness
