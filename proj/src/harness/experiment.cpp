#include "autodrive/harness/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "autodrive/harness/csv.hpp"
#include "autodrive/harness/plot.hpp"
#include "autodrive/neat/evaluate.hpp"
#include "autodrive/neat/genome_io.hpp"
#include "autodrive/qlearn/agent.hpp"
#include "autodrive/sim/track_io.hpp"

namespace autodrive::sim {

using nlohmann::json;

void to_json(json& j, const EnvConfig& c) {
  j = json{{"max_steps", c.max_steps},         {"turn_step", c.turn_step},
           {"speed_step", c.speed_step},       {"speed_min", c.speed_min},
           {"speed_max", c.speed_max},         {"radar_max", c.radar_max},
           {"car_half_length", c.car_half_length}, {"car_half_width", c.car_half_width}};
}

void from_json(const json& j, EnvConfig& c) {
  if (!j.is_object()) throw std::invalid_argument("env config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "max_steps") c.max_steps = v.get<int>();
    else if (key == "turn_step") c.turn_step = v.get<double>();
    else if (key == "speed_step") c.speed_step = v.get<double>();
    else if (key == "speed_min") c.speed_min = v.get<double>();
    else if (key == "speed_max") c.speed_max = v.get<double>();
    else if (key == "radar_max") c.radar_max = v.get<double>();
    else if (key == "car_half_length") c.car_half_length = v.get<double>();
    else if (key == "car_half_width") c.car_half_width = v.get<double>();
    else throw std::invalid_argument("unknown env field '" + key + "'");
  }
  c.validate();
}

}  // namespace autodrive::sim

namespace autodrive::harness {

using nlohmann::json;
using nlohmann::ordered_json;

void apply_map_params(const json& j, sim::MapParams& c) {
  if (!j.is_object()) throw std::invalid_argument("map_params must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "width") c.width = v.get<int>();
    else if (key == "height") c.height = v.get<int>();
    else if (key == "track_width") c.track_width = v.get<double>();
    else if (key == "checkpoints") c.checkpoints = v.get<int>();
    else if (key == "sharpness") c.sharpness = v.get<double>();
    else if (key == "turns") c.turns = v.get<int>();
    else if (key == "scale") c.scale = v.get<double>();
    else if (key == "straight_fraction") c.straight_fraction = v.get<double>();
    else if (key == "car_width") c.car_width = v.get<double>();
    else if (key == "margin") c.margin = v.get<double>();
    else throw std::invalid_argument("unknown map_params field '" + key + "'");
  }
}

void ExperimentConfig::validate() const {
  if (seeds.empty()) throw std::invalid_argument("at least one seed is required");
  if (map.empty()) throw std::invalid_argument("no map given");
  env.validate();
  q.validate();
  neat.validate();
}

ExperimentConfig parse_experiment_config(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  ExperimentConfig c;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "map") c.map = v.get<std::string>();
      else if (key == "map_seed") c.map_seed = v.get<std::uint64_t>();
      else if (key == "map_params") {
        sim::MapParams probe;
        apply_map_params(v, probe);  // reject bad keys early
        c.map_params = v;
      } else if (key == "seeds") c.seeds = v.get<std::vector<std::uint64_t>>();
      else if (key == "env") c.env = v.get<sim::EnvConfig>();
      else if (key == "q") c.q = v.get<qlearn::QConfig>();
      else if (key == "neat") c.neat = v.get<neat::NeatConfig>();
      else if (key == "out") c.output_dir = v.get<std::string>();
      else throw std::invalid_argument("unknown config field '" + key + "'");
    }
  } catch (const json::type_error& e) {
    throw std::invalid_argument(std::string("config has a field of the wrong type: ") + e.what());
  }
  c.validate();
  return c;
}

ExperimentConfig load_experiment_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  return parse_experiment_config(j);
}

sim::TrackMap resolve_map(const std::string& map, std::uint64_t map_seed, const json& overrides) {
  if (auto arch = sim::parse_archetype(map)) {
    sim::MapParams p = sim::default_params(*arch);
    apply_map_params(overrides, p);
    return sim::generate_map(*arch, p, map_seed);
  }
  return sim::load_track(fs::path(map));
}

fs::path seed_dir(const fs::path& out, std::uint64_t seed) {
  return out / ("seed_" + std::to_string(seed));
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

double ExperimentSummary::lap_completion_rate() const {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& s : q) sum += s.lap_completion_rate, ++n;
  for (const auto& s : neat) sum += s.completes_lap ? 1.0 : 0.0, ++n;
  return n ? sum / static_cast<double>(n) : 0.0;
}

ordered_json summary_to_json(const ExperimentSummary& s) {
  ordered_json j;
  j["algorithm"] = s.algorithm;
  j["map"] = s.map;
  ordered_json seeds = ordered_json::array();
  for (const auto& q : s.q) {
    seeds.push_back({{"seed", q.seed},
                     {"train_episodes", q.train_episodes},
                     {"eval_episodes", q.eval_episodes},
                     {"eval_mean_reward", q.eval_mean_reward},
                     {"eval_max_reward", q.eval_max_reward},
                     {"checkpoint_completion_rate", q.checkpoint_completion_rate},
                     {"lap_completion_rate", q.lap_completion_rate}});
  }
  for (const auto& n : s.neat) {
    seeds.push_back({{"seed", n.seed},
                     {"generations", n.generations},
                     {"population", n.population},
                     {"best_fitness", n.best_fitness},
                     {"best_laps", n.best_laps},
                     {"completes_lap", n.completes_lap}});
  }
  j["seeds"] = std::move(seeds);
  j["lap_completion_rate"] = s.lap_completion_rate();
  return j;
}

ExperimentSummary summary_from_json(const json& j) {
  ExperimentSummary s;
  try {
    s.algorithm = j.at("algorithm").get<std::string>();
    s.map = j.at("map").get<std::string>();
    for (const auto& e : j.at("seeds")) {
      if (s.algorithm == "Q") {
        s.q.push_back(QSeedSummary{e.at("seed").get<std::uint64_t>(), e.at("train_episodes").get<int>(),
                                   e.at("eval_episodes").get<int>(), e.at("eval_mean_reward").get<double>(),
                                   e.at("eval_max_reward").get<double>(),
                                   e.at("checkpoint_completion_rate").get<double>(),
                                   e.at("lap_completion_rate").get<double>()});
      } else if (s.algorithm == "NEAT") {
        s.neat.push_back(NeatSeedSummary{e.at("seed").get<std::uint64_t>(), e.at("generations").get<int>(),
                                         e.at("population").get<int>(), e.at("best_fitness").get<double>(),
                                         e.at("best_laps").get<int>(), e.at("completes_lap").get<bool>()});
      } else {
        throw std::runtime_error("unknown algorithm '" + s.algorithm + "'");
      }
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed summary: ") + e.what());
  }
  return s;
}

ExperimentSummary load_summary(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing summary " + path.string());
  try {
    return summary_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

namespace {

using Clock = std::chrono::steady_clock;

void write_timing(const fs::path& dir, double seconds) {
  ordered_json t;
  t["train_seconds"] = seconds;
  write_text(dir / "timing.json", t.dump(2));
}

void plot(PlotKind kind, const CsvTable& t, const fs::path& out) {
  write_text(out, render_svg(kind, t));
}

}  // namespace

ExperimentSummary run_q_experiment(const ExperimentConfig& cfg, bool verbose) {
  cfg.validate();
  const sim::TrackMap track = resolve_map(cfg.map, cfg.map_seed, cfg.map_params);
  fs::create_directories(cfg.output_dir);
  ExperimentSummary summary{"Q", track.name, {}, {}};
  const int n_cp = static_cast<int>(track.checkpoints.size());

  for (std::uint64_t seed : cfg.seeds) {
    qlearn::QConfig qc = cfg.q;
    qc.seed = seed;
    const fs::path dir = seed_dir(cfg.output_dir, seed);
    fs::create_directories(dir);

    const auto t0 = Clock::now();
    const qlearn::TrainResult trained = qlearn::train(track, qc, cfg.env);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const auto evals = qlearn::evaluate(trained.table, track, qc, cfg.env);

    const CsvTable train_csv = episodes_table(trained.records);
    const CsvTable avg_csv = block_average_table(trained.records, 100);
    write_csv(dir / "train.csv", train_csv, kEpisodeColumns);
    write_csv(dir / "train_avg100.csv", avg_csv, kAvg100Columns);
    write_csv(dir / "eval.csv", episodes_table(evals), kEpisodeColumns);
    qlearn::save_qtable(trained.table, dir / "qtable.bin");
    if (!train_csv.rows.empty()) {
      plot(PlotKind::RewardPerEpisode, train_csv, dir / "reward_per_episode.svg");
      plot(PlotKind::RewardPerEpisodeAvg100, avg_csv, dir / "reward_avg100.svg");
    }
    write_timing(dir, secs);

    QSeedSummary s{seed, qc.episodes_train, qc.episodes_eval, 0.0, 0.0, 0.0, 0.0};
    if (!evals.empty()) {
      double sum = 0.0;
      s.eval_max_reward = evals.front().total_reward;
      int all_cp = 0, laps = 0;
      for (const auto& r : evals) {
        sum += r.total_reward;
        s.eval_max_reward = std::max(s.eval_max_reward, r.total_reward);
        all_cp += r.checkpoints_hit >= n_cp ? 1 : 0;
        laps += r.laps >= 1 ? 1 : 0;
      }
      const auto n = static_cast<double>(evals.size());
      s.eval_mean_reward = sum / n;
      s.checkpoint_completion_rate = all_cp / n;
      s.lap_completion_rate = laps / n;
    }
    if (verbose) {
      std::cerr << "[q] seed " << seed << ": " << qc.episodes_train << " episodes in " << secs
                << " s, eval mean reward " << s.eval_mean_reward << ", laps "
                << s.lap_completion_rate * 100.0 << "%\n";
    }
    summary.q.push_back(s);
  }
  write_text(cfg.output_dir / "summary.json", summary_to_json(summary).dump(2));
  return summary;
}

ExperimentSummary run_neat_experiment(const ExperimentConfig& cfg, bool verbose) {
  cfg.validate();
  const sim::TrackMap track = resolve_map(cfg.map, cfg.map_seed, cfg.map_params);
  fs::create_directories(cfg.output_dir);
  ExperimentSummary summary{"NEAT", track.name, {}, {}};

  for (std::uint64_t seed : cfg.seeds) {
    neat::NeatConfig nc = cfg.neat;
    nc.seed = seed;
    const fs::path dir = seed_dir(cfg.output_dir, seed);
    fs::create_directories(dir);

    const auto t0 = Clock::now();
    const neat::RunResult run = neat::run_neat(track, nc, cfg.env, [&](const neat::GenerationStats& g) {
      if (verbose && (g.generation % 10 == 9)) {
        std::cerr << "[neat] seed " << seed << " generation " << g.generation + 1 << ": best "
                  << g.best_fitness << ", species " << g.species_count << "\n";
      }
    });
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();

    const CsvTable gens = generations_table(run.stats);
    const CsvTable species = species_table(run.stats);
    write_csv(dir / "generations.csv", gens, kGenerationColumns);
    write_csv(dir / "species.csv", species, kSpeciesColumns);
    neat::save_genome(run.best, dir / "best_genome.json");
    if (!gens.rows.empty()) {
      plot(PlotKind::BestFitness, gens, dir / "best_fitness.svg");
      plot(PlotKind::MeanFitness, gens, dir / "mean_fitness.svg");
      plot(PlotKind::BestMeanFitness, gens, dir / "best_mean_fitness.svg");
      plot(PlotKind::SpeciesDiversity, gens, dir / "species_diversity.svg");
      plot(PlotKind::SpeciesFitness, species, dir / "species_fitness.svg");
    }
    write_timing(dir, secs);

    const neat::DriveTrace trace = neat::drive_genome(run.best, track, cfg.env, nc.eval_lap_limit);
    NeatSeedSummary s{seed, nc.generations, nc.population, run.best.fitness.value_or(0.0), trace.laps,
                      trace.laps >= 1};
    if (verbose) {
      std::cerr << "[neat] seed " << seed << ": best fitness " << s.best_fitness << ", laps "
                << s.best_laps << " (" << secs << " s)\n";
    }
    summary.neat.push_back(s);
  }
  write_text(cfg.output_dir / "summary.json", summary_to_json(summary).dump(2));
  return summary;
}

}  // namespace autodrive::harness
