#include "autodrive/neat/species.hpp"

#include <algorithm>
#include <cmath>

namespace autodrive::neat {

double genomic_distance(const Genome& a, const Genome& b, const NeatConfig& cfg) {
  int disjoint = 0;

  double bias_diff = 0.0;
  int matching_nodes = 0;
  for (const auto& [k, n] : a.nodes) {
    const auto it = b.nodes.find(k);
    if (it == b.nodes.end()) {
      ++disjoint;
    } else if (n.kind != NodeKind::Input) {
      bias_diff += std::abs(n.bias - it->second.bias);
      ++matching_nodes;
    }
  }
  for (const auto& [k, n] : b.nodes) {
    if (!a.nodes.contains(k)) ++disjoint;
  }

  double weight_diff = 0.0;
  int matching_conns = 0;
  for (const auto& [innov, c] : a.connections) {
    const auto it = b.connections.find(innov);
    if (it == b.connections.end()) {
      ++disjoint;
    } else {
      weight_diff += std::abs(c.weight - it->second.weight);
      ++matching_conns;
    }
  }
  for (const auto& [innov, c] : b.connections) {
    if (!a.connections.contains(innov)) ++disjoint;
  }

  const double n = static_cast<double>(
      std::max<std::size_t>({a.connections.size(), b.connections.size(), std::size_t{1}}));
  double d = cfg.compat_coeff_disjoint * disjoint / n;
  if (matching_conns > 0) d += cfg.compat_coeff_weight * weight_diff / matching_conns;
  if (matching_nodes > 0) d += cfg.compat_coeff_weight * bias_diff / matching_nodes;
  return d;
}

std::vector<Species> speciate(const std::vector<Genome>& population,
                              const std::vector<Species>& previous, const NeatConfig& cfg,
                              int generation, int& next_species_id) {
  std::vector<bool> assigned(population.size(), false);
  std::vector<Species> out;

  for (const Species& old : previous) {
    std::size_t best = population.size();
    double best_d = 0.0;
    for (std::size_t i = 0; i < population.size(); ++i) {
      if (assigned[i]) continue;
      const double d = genomic_distance(old.representative, population[i], cfg);
      if (best == population.size() || d < best_d) {
        best = i;
        best_d = d;
      }
    }
    if (best == population.size()) break;  // more species than genomes left
    assigned[best] = true;
    Species s = old;
    s.representative = population[best];
    s.members = {population[best].key};
    out.push_back(std::move(s));
  }

  for (std::size_t i = 0; i < population.size(); ++i) {
    if (assigned[i]) continue;
    const Genome& g = population[i];
    auto home = std::find_if(out.begin(), out.end(), [&](const Species& s) {
      return genomic_distance(s.representative, g, cfg) < cfg.compat_threshold;
    });
    if (home != out.end()) {
      home->members.push_back(g.key);
    } else {
      Species s;
      s.id = next_species_id++;
      s.representative = g;
      s.members = {g.key};
      s.created_generation = generation;
      s.last_improved_generation = generation;
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace autodrive::neat
