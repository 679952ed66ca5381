#pragma once

#include <filesystem>

#include "json.hpp"

#include "autodrive/neat/genome.hpp"

namespace autodrive::neat {

nlohmann::ordered_json genome_to_json(const Genome& g);
// Throws std::runtime_error on malformed input and std::invalid_argument when
// the genes do not form a valid genome (e.g. a dangling node reference).
Genome genome_from_json(const nlohmann::ordered_json& j);

void save_genome(const Genome& g, const std::filesystem::path& path);
Genome load_genome(const std::filesystem::path& path);

}  // namespace autodrive::neat
