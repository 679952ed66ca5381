#pragma once

#include <limits>
#include <vector>

#include "autodrive/neat/config.hpp"
#include "autodrive/neat/genome.hpp"

namespace autodrive::neat {

// c_disjoint * (unmatched node keys + unmatched innovations) / N
//   + c_weight * mean |dw| over matching connections
//   + c_weight * mean |dbias| over matching nodes,
// with N the larger connection-gene count (at least 1).
double genomic_distance(const Genome& a, const Genome& b, const NeatConfig& cfg);

struct Species {
  int id = 0;
  Genome representative;
  std::vector<int> members;  // genome keys
  double best_fitness_ever = -std::numeric_limits<double>::infinity();
  int last_improved_generation = 0;
  int created_generation = 0;
};

// Carries every previous species forward by picking the unassigned genome
// closest to its old representative as the new one, then places each other
// genome (in population order) into the first species whose representative
// is within compat_threshold, founding new species as needed. Species ids
// come from next_species_id.
std::vector<Species> speciate(const std::vector<Genome>& population,
                              const std::vector<Species>& previous, const NeatConfig& cfg,
                              int generation, int& next_species_id);

}  // namespace autodrive::neat
