#include "autodrive/neat/crossover.hpp"

namespace autodrive::neat {

Genome crossover(const Genome& fitter, const Genome& other, int child_key, Rng& rng,
                 double disabled_gene_rate) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Genome child;
  child.key = child_key;

  for (const auto& [innov, gene] : fitter.connections) {
    const auto match = other.connections.find(innov);
    if (match == other.connections.end()) {
      child.connections.emplace(innov, gene);
      continue;
    }
    ConnectionGene inherited = coin(rng) < 0.5 ? gene : match->second;
    if (!gene.enabled || !match->second.enabled) {
      inherited.enabled = !(coin(rng) < disabled_gene_rate);
    }
    child.connections.emplace(innov, inherited);
  }

  // Every node of the fitter parent carries over, which covers all endpoints.
  for (const auto& [key, node] : fitter.nodes) {
    const auto match = other.nodes.find(key);
    if (match == other.nodes.end() || coin(rng) < 0.5) {
      child.nodes.emplace(key, node);
    } else {
      child.nodes.emplace(key, match->second);
    }
  }
  return child;
}

}  // namespace autodrive::neat
