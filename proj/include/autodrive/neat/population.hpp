#pragma once

#include <functional>
#include <vector>

#include "autodrive/neat/config.hpp"
#include "autodrive/neat/genome.hpp"
#include "autodrive/neat/innovation.hpp"
#include "autodrive/neat/mutation.hpp"
#include "autodrive/neat/species.hpp"

namespace autodrive::neat {

struct SpeciesStats {
  int species_id = 0;
  int size = 0;
  double best_fitness = 0.0;
  int stagnation = 0;
  bool operator==(const SpeciesStats&) const = default;
};

struct GenerationStats {
  int generation = 0;
  double best_fitness = 0.0;
  double mean_fitness = 0.0;
  int species_count = 0;
  std::vector<SpeciesStats> species;
  bool operator==(const GenerationStats&) const = default;
};

// Everything one evolutionary run mutates between generations.
struct Population {
  std::vector<Genome> genomes;
  std::vector<Species> species;
  InnovationRegistry registry;
  Rng rng;
  int generation = 0;
  int next_genome_key = 0;
  int next_species_id = 0;
};

// Minimal genomes: inputs fully connected to outputs, weights uniform in
// [-1, 1], no hidden nodes. Input keys are 0..num_inputs-1 and output keys
// follow. The returned population is already speciated.
Population init_population(const NeatConfig& cfg);

// One reproduction cycle over an evaluated population: stats for the current
// generation, stagnation culling, elitism, fitness-proportional offspring
// quotas, crossover + mutation and re-speciation. Throws std::runtime_error
// if no species survives, std::logic_error if a genome lacks fitness.
GenerationStats advance_generation(Population& pop, const NeatConfig& cfg);

using FitnessFn = std::function<double(const Genome&)>;
using GenerationCallback = std::function<void(const GenerationStats&)>;

struct RunResult {
  Genome best;
  std::vector<GenerationStats> stats;
};

// Genomes already carrying a fitness (copied elites) are not re-evaluated;
// fitness functions are expected to be deterministic.
void evaluate_population(Population& pop, const FitnessFn& fitness);

// init -> {evaluate, record, advance} x generations. With zero generations
// the initial population is evaluated and its best returned.
RunResult run_neat(const NeatConfig& cfg, const FitnessFn& fitness,
                   const GenerationCallback& on_generation = {});

}  // namespace autodrive::neat
