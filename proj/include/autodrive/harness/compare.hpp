#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "autodrive/harness/csv.hpp"

namespace autodrive::harness {

inline const std::vector<std::string> kReportColumns = {
    "map",         "algorithm",         "seed",        "eval_mean_reward", "lap_completion",
    "checkpoint_completion", "best_fitness", "train_seconds"};

struct Report {
  CsvTable table;
  std::string text;
};

// Each entry is a run directory holding summary.json (and per-seed
// timing.json, optional). Both sides must cover the same set of maps;
// a missing summary or a map-set mismatch throws std::runtime_error.
Report build_report(const std::vector<std::filesystem::path>& q_runs,
                    const std::vector<std::filesystem::path>& neat_runs);

// <out>/report.csv and <out>/report.txt
Report compare(const std::vector<std::filesystem::path>& q_runs,
               const std::vector<std::filesystem::path>& neat_runs, const std::filesystem::path& out);

}  // namespace autodrive::harness
