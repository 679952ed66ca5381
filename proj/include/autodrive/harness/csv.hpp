#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autodrive/neat/population.hpp"
#include "autodrive/qlearn/agent.hpp"

namespace autodrive::harness {

// Plain comma-separated table. No quoting: fields must not contain commas,
// quotes or line breaks, which write_csv enforces.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a named column; throws std::runtime_error naming the column.
  std::size_t column(std::string_view name) const;
  bool has_column(std::string_view name) const;
  std::vector<double> numbers(std::string_view name) const;

  bool operator==(const CsvTable&) const = default;
};

// Shortest decimal form that round-trips.
std::string format_number(double v);
std::string format_number(long long v);

inline const std::vector<std::string> kEpisodeColumns = {
    "episode", "total_reward", "steps", "distance", "checkpoints_hit", "laps", "epsilon", "lr",
    "terminal"};
inline const std::vector<std::string> kAvg100Columns = {"block", "first_episode", "mean_reward"};
inline const std::vector<std::string> kGenerationColumns = {"generation", "best_fitness",
                                                            "mean_fitness", "species_count"};
inline const std::vector<std::string> kSpeciesColumns = {"generation", "species_id", "size",
                                                         "best_fitness", "stagnation"};

CsvTable episodes_table(std::span<const qlearn::EpisodeRecord> records);
// Non-overlapping blocks; a trailing partial block is averaged over its own rows.
CsvTable block_average_table(std::span<const qlearn::EpisodeRecord> records, int block = 100);
CsvTable generations_table(std::span<const neat::GenerationStats> stats);
CsvTable species_table(std::span<const neat::GenerationStats> stats);

// Checks the header against `schema`, row widths, and field characters.
// Throws std::runtime_error.
void validate_table(const CsvTable& t, std::span<const std::string> schema);

void write_csv(const std::filesystem::path& path, const CsvTable& t,
               std::span<const std::string> schema);
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace autodrive::harness
