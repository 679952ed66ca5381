#include "autodrive/harness/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "autodrive/harness/compare.hpp"
#include "autodrive/harness/experiment.hpp"
#include "autodrive/harness/plot.hpp"
#include "autodrive/neat/evaluate.hpp"
#include "autodrive/neat/genome_io.hpp"
#include "autodrive/qlearn/agent.hpp"
#include "autodrive/sim/track_io.hpp"

namespace autodrive::harness {

namespace {

// Flags every subcommand understands.
struct Common {
  std::vector<std::uint64_t> seeds;
  std::string map;
  std::string config;
  std::string out;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seeds, "Seed (repeat for several runs)");
  sub->add_option("--map", c.map, "Archetype name or path prefix of a .pgm/.json pair");
  sub->add_option("--config", c.config, "JSON experiment config")->check(CLI::ExistingFile);
  sub->add_option("--out", c.out, "Output directory (default: $AUTODRIVE_OUT)");
}

fs::path output_dir(const Common& c) {
  if (!c.out.empty()) return c.out;
  if (const char* env = std::getenv("AUTODRIVE_OUT"); env && *env) return env;
  throw std::runtime_error("no output directory: pass --out or set AUTODRIVE_OUT");
}

ExperimentConfig experiment(const Common& c) {
  ExperimentConfig cfg = c.config.empty() ? ExperimentConfig{} : load_experiment_config(c.config);
  if (!c.map.empty()) cfg.map = c.map;
  if (!c.seeds.empty()) cfg.seeds = c.seeds;
  cfg.output_dir = output_dir(c);
  return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Headless driving benchmark: tabular Q-learning vs NEAT", "autodrive"};
  app.require_subcommand(1);

  Common gen_c, tq_c, eq_c, tn_c, eg_c, plot_c, cmp_c;

  auto* gen = app.add_subcommand("gen-maps", "Write map1..map4 (.pgm mask + .json meta)");
  add_common(gen, gen_c);

  std::optional<int> episodes, eval_episodes;
  std::string action_set;
  auto* tq = app.add_subcommand("train-q", "Train and evaluate tabular Q-learning");
  add_common(tq, tq_c);
  tq->add_option("--episodes", episodes, "Training episodes");
  tq->add_option("--eval-episodes", eval_episodes, "Evaluation episodes");
  tq->add_option("--action-set", action_set, "Six or Three");

  std::string table_path;
  std::optional<int> eq_episodes;
  auto* eq = app.add_subcommand("eval-q", "Evaluate a saved Q-table");
  add_common(eq, eq_c);
  eq->add_option("--table", table_path, "qtable.bin")->required()->check(CLI::ExistingFile);
  eq->add_option("--episodes", eq_episodes, "Evaluation episodes");

  std::optional<int> generations, population;
  auto* tn = app.add_subcommand("train-neat", "Evolve NEAT controllers");
  add_common(tn, tn_c);
  tn->add_option("--generations", generations, "Generations");
  tn->add_option("--population", population, "Population size");

  std::string genome_path;
  auto* eg = app.add_subcommand("eval-genome", "Drive a saved genome and report its fitness");
  add_common(eg, eg_c);
  eg->add_option("--genome", genome_path, "best_genome.json")->required()->check(CLI::ExistingFile);

  std::string kind_name, csv_path;
  auto* pl = app.add_subcommand("plot", "Render a CSV as an SVG line chart");
  add_common(pl, plot_c);
  pl->add_option("--kind", kind_name, "RewardPerEpisodeAvg100, RewardPerEpisode, BestFitness, "
                                      "BestMeanFitness, MeanFitness, SpeciesFitness, SpeciesDiversity")
      ->required();
  pl->add_option("--csv", csv_path, "Source CSV")->required();

  std::vector<std::string> q_runs, neat_runs;
  auto* cmp = app.add_subcommand("compare", "Side-by-side report of Q and NEAT run directories");
  add_common(cmp, cmp_c);
  cmp->add_option("--q", q_runs, "Q run directory (repeatable)");
  cmp->add_option("--neat", neat_runs, "NEAT run directory (repeatable)");

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
    bool known = false;
    for (const auto* sub : app.get_subcommands({})) known = known || sub->get_name() == args.front();
    if (!known) {
      err << "error: unknown subcommand '" << args.front() << "'\n\n" << app.help();
      return 2;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*gen) {
      const fs::path dir = output_dir(gen_c);
      ExperimentConfig cfg = gen_c.config.empty() ? ExperimentConfig{} : load_experiment_config(gen_c.config);
      const std::uint64_t seed = gen_c.seeds.empty() ? cfg.map_seed : gen_c.seeds.front();
      fs::create_directories(dir);
      int i = 1;
      for (sim::Archetype a : sim::kAllArchetypes) {
        sim::MapParams p = sim::default_params(a);
        apply_map_params(cfg.map_params, p);
        const sim::TrackMap t = sim::generate_map(a, p, seed);
        const fs::path prefix = dir / ("map" + std::to_string(i++));
        sim::save_track(t, prefix);
        out << prefix.string() << " " << t.name << "\n";
      }
    } else if (*tq) {
      ExperimentConfig cfg = experiment(tq_c);
      if (episodes) cfg.q.episodes_train = *episodes;
      if (eval_episodes) cfg.q.episodes_eval = *eval_episodes;
      if (!action_set.empty()) {
        auto set = qlearn::parse_action_set(action_set);
        if (!set) throw CLI::ValidationError("--action-set", "expected Six or Three");
        cfg.q.action_set = *set;
      }
      const ExperimentSummary s = run_q_experiment(cfg, true);
      out << summary_to_json(s).dump(2) << "\n";
    } else if (*eq) {
      ExperimentConfig cfg = experiment(eq_c);
      if (eq_episodes) cfg.q.episodes_eval = *eq_episodes;
      const sim::TrackMap track = resolve_map(cfg.map, cfg.map_seed, cfg.map_params);
      const qlearn::QTable table = qlearn::load_qtable(table_path);
      if (table.buckets() != cfg.q.buckets ||
          table.action_count() != static_cast<int>(qlearn::actions_of(cfg.q.action_set).size())) {
        throw std::runtime_error("Q-table shape does not match the configured buckets/action set");
      }
      fs::create_directories(cfg.output_dir);
      for (std::uint64_t seed : cfg.seeds) {
        qlearn::QConfig qc = cfg.q;
        qc.seed = seed;
        const auto evals = qlearn::evaluate(table, track, qc, cfg.env);
        const fs::path dir = seed_dir(cfg.output_dir, seed);
        fs::create_directories(dir);
        write_csv(dir / "eval.csv", episodes_table(evals), kEpisodeColumns);
        int laps = 0;
        double sum = 0.0;
        for (const auto& r : evals) laps += r.laps >= 1, sum += r.total_reward;
        out << "seed " << seed << ": mean reward "
            << (evals.empty() ? 0.0 : sum / static_cast<double>(evals.size())) << ", laps " << laps
            << "/" << evals.size() << "\n";
      }
    } else if (*tn) {
      ExperimentConfig cfg = experiment(tn_c);
      if (generations) cfg.neat.generations = *generations;
      if (population) cfg.neat.population = *population;
      const ExperimentSummary s = run_neat_experiment(cfg, true);
      out << summary_to_json(s).dump(2) << "\n";
    } else if (*eg) {
      ExperimentConfig cfg = experiment(eg_c);
      const sim::TrackMap track = resolve_map(cfg.map, cfg.map_seed, cfg.map_params);
      const neat::Genome g = neat::load_genome(genome_path);
      const neat::DriveTrace tr = neat::drive_genome(g, track, cfg.env, cfg.neat.eval_lap_limit);
      nlohmann::ordered_json j;
      j["map"] = track.name;
      j["genome"] = g.key;
      j["fitness"] = neat::driving_fitness(tr);
      j["recorded_fitness"] = g.fitness ? nlohmann::ordered_json(*g.fitness) : nlohmann::ordered_json(nullptr);
      j["distance"] = tr.distance;
      j["mean_speed"] = tr.mean_speed();
      j["steps"] = tr.steps;
      j["laps"] = tr.laps;
      j["checkpoints_hit"] = tr.checkpoints_hit;
      j["crashed"] = tr.crashed;
      fs::create_directories(cfg.output_dir);
      write_text(cfg.output_dir / "genome_eval.json", j.dump(2));
      out << j.dump(2) << "\n";
    } else if (*pl) {
      auto kind = parse_plot_kind(kind_name);
      if (!kind) throw CLI::ValidationError("--kind", "unknown plot kind '" + kind_name + "'");
      fs::path target = output_dir(plot_c);
      if (target.extension() != ".svg") {
        fs::create_directories(target);
        target /= fs::path(csv_path).stem().string() + "_" + std::string(to_string(*kind)) + ".svg";
      }
      render_plot(PlotSpec{*kind, csv_path, target});
      out << target.string() << "\n";
    } else if (*cmp) {
      std::vector<fs::path> q(q_runs.begin(), q_runs.end());
      std::vector<fs::path> n(neat_runs.begin(), neat_runs.end());
      const Report r = compare(q, n, output_dir(cmp_c));
      out << r.text;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace autodrive::harness
