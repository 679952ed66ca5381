#pragma once

#include "autodrive/neat/config.hpp"
#include "autodrive/neat/genome.hpp"
#include "autodrive/neat/mutation.hpp"

namespace autodrive::neat {

// Aligns parents by innovation number. Matching genes come from either parent
// at random, disjoint and excess genes only from `fitter`. A gene disabled in
// either parent stays disabled with probability disabled_gene_rate.
// The child gets `child_key` and no fitness.
Genome crossover(const Genome& fitter, const Genome& other, int child_key, Rng& rng,
                 double disabled_gene_rate = 0.75);

}  // namespace autodrive::neat
