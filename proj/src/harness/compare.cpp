#include "autodrive/harness/compare.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "autodrive/harness/experiment.hpp"

namespace autodrive::harness {

namespace {

struct Run {
  fs::path dir;
  ExperimentSummary summary;
};

std::vector<Run> load_runs(const std::vector<fs::path>& dirs, const char* algorithm) {
  if (dirs.empty()) throw std::runtime_error(std::string("no ") + algorithm + " summary given");
  std::vector<Run> runs;
  for (const auto& d : dirs) {
    Run r{d, load_summary(d / "summary.json")};
    if (r.summary.algorithm != algorithm) {
      throw std::runtime_error((d / "summary.json").string() + " is a " + r.summary.algorithm +
                               " summary, expected " + algorithm);
    }
    runs.push_back(std::move(r));
  }
  return runs;
}

std::string train_seconds(const fs::path& dir, std::uint64_t seed) {
  std::ifstream in(seed_dir(dir, seed) / "timing.json", std::ios::binary);
  if (!in) return "NA";
  try {
    return format_number(nlohmann::json::parse(in).at("train_seconds").get<double>());
  } catch (const nlohmann::json::exception&) {
    return "NA";
  }
}

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * v);
  return buf;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

Report build_report(const std::vector<fs::path>& q_dirs, const std::vector<fs::path>& neat_dirs) {
  const auto q_runs = load_runs(q_dirs, "Q");
  const auto n_runs = load_runs(neat_dirs, "NEAT");

  std::set<std::string> q_maps, n_maps;
  for (const auto& r : q_runs) q_maps.insert(r.summary.map);
  for (const auto& r : n_runs) n_maps.insert(r.summary.map);
  if (q_maps != n_maps) {
    auto join = [](const std::set<std::string>& s) {
      std::string out;
      for (const auto& m : s) out += (out.empty() ? "" : ", ") + m;
      return out;
    };
    throw std::runtime_error("map sets differ: Q has {" + join(q_maps) + "}, NEAT has {" +
                             join(n_maps) + "}");
  }

  Report rep{CsvTable{kReportColumns, {}}, {}};
  for (const auto& map : q_maps) {
    rep.text += "map " + map + "\n";
    for (const auto& r : q_runs) {
      if (r.summary.map != map) continue;
      for (const auto& s : r.summary.q) {
        const std::string secs = train_seconds(r.dir, s.seed);
        rep.table.rows.push_back({map, "Q", std::to_string(s.seed), format_number(s.eval_mean_reward),
                                  format_number(s.lap_completion_rate),
                                  format_number(s.checkpoint_completion_rate), "NA", secs});
        rep.text += "  Q    seed " + std::to_string(s.seed) + ": eval mean reward " +
                    num(s.eval_mean_reward) + ", laps " + pct(s.lap_completion_rate) +
                    ", all checkpoints " + pct(s.checkpoint_completion_rate) + ", train " + secs +
                    " s\n";
      }
    }
    for (const auto& r : n_runs) {
      if (r.summary.map != map) continue;
      for (const auto& s : r.summary.neat) {
        const std::string secs = train_seconds(r.dir, s.seed);
        rep.table.rows.push_back({map, "NEAT", std::to_string(s.seed), "NA",
                                  format_number(s.completes_lap ? 1.0 : 0.0), "NA",
                                  format_number(s.best_fitness), secs});
        rep.text += "  NEAT seed " + std::to_string(s.seed) + ": best fitness " + num(s.best_fitness) +
                    ", best genome laps " + std::to_string(s.best_laps) + ", train " + secs + " s\n";
      }
    }
    double q_rate = 0.0, n_rate = 0.0;
    int q_n = 0, n_n = 0;
    for (const auto& r : q_runs) {
      if (r.summary.map == map) q_rate += r.summary.lap_completion_rate(), ++q_n;
    }
    for (const auto& r : n_runs) {
      if (r.summary.map == map) n_rate += r.summary.lap_completion_rate(), ++n_n;
    }
    rep.text += "  lap completion: Q " + pct(q_rate / q_n) + ", NEAT " + pct(n_rate / n_n) + "\n";
  }
  validate_table(rep.table, kReportColumns);
  return rep;
}

Report compare(const std::vector<fs::path>& q_runs, const std::vector<fs::path>& neat_runs,
               const fs::path& out) {
  Report rep = build_report(q_runs, neat_runs);
  fs::create_directories(out);
  write_csv(out / "report.csv", rep.table, kReportColumns);
  write_text(out / "report.txt", rep.text);
  return rep;
}

}  // namespace autodrive::harness
