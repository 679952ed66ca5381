#pragma once

#include <random>

#include "autodrive/neat/config.hpp"
#include "autodrive/neat/genome.hpp"
#include "autodrive/neat/innovation.hpp"

namespace autodrive::neat {

using Rng = std::mt19937_64;

// Splits a random enabled connection u->v (weight w) into u->n (1.0) and
// n->v (w), disabling the original. No-op without enabled connections.
void mutate_add_node(Genome& g, Rng& rng, InnovationRegistry& registry);

// Removes a random hidden node and every connection touching it.
void mutate_delete_node(Genome& g, Rng& rng);

// Adds u->v for a random ordered pair with v not an input, no existing gene
// between them and no cycle created. Gives up after `attempts` rejected draws.
void mutate_add_connection(Genome& g, Rng& rng, InnovationRegistry& registry, int attempts = 20);

void mutate_delete_connection(Genome& g, Rng& rng);

void mutate_weights_and_activation(Genome& g, const NeatConfig& cfg, Rng& rng);

// Applies each structural operator with its configured probability, then the
// weight/bias/activation pass.
void mutate(Genome& g, const NeatConfig& cfg, Rng& rng, InnovationRegistry& registry);

}  // namespace autodrive::neat
