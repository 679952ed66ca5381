#include "autodrive/neat/population.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "autodrive/neat/crossover.hpp"

namespace autodrive::neat {

namespace {

double fitness_of(const Genome& g) {
  if (!g.fitness) {
    throw std::logic_error("genome " + std::to_string(g.key) + " has not been evaluated");
  }
  return *g.fitness;
}

// Higher fitness first, lower key on ties.
bool fitter_first(const Genome* a, const Genome* b) {
  if (*a->fitness != *b->fitness) return *a->fitness > *b->fitness;
  return a->key < b->key;
}

// Largest-remainder apportionment of `total` slots with a floor of one per
// entry. Entries beyond `total` get nothing (caller orders them by priority).
std::vector<int> apportion(const std::vector<double>& weights, int total) {
  const std::size_t n = weights.size();
  std::vector<int> counts(n, 0);
  if (total <= 0 || n == 0) return counts;
  const std::size_t funded = std::min(n, static_cast<std::size_t>(total));
  for (std::size_t i = 0; i < funded; ++i) counts[i] = 1;
  int remaining = total - static_cast<int>(funded);
  if (remaining == 0) return counts;

  double sum = 0.0;
  for (std::size_t i = 0; i < funded; ++i) sum += std::max(weights[i], 0.0);
  std::vector<double> share(funded);
  for (std::size_t i = 0; i < funded; ++i) {
    share[i] = sum > 0.0 ? std::max(weights[i], 0.0) / sum * remaining
                         : static_cast<double>(remaining) / static_cast<double>(funded);
  }
  int given = 0;
  std::vector<std::pair<double, std::size_t>> remainders;
  for (std::size_t i = 0; i < funded; ++i) {
    const int whole = static_cast<int>(std::floor(share[i]));
    counts[i] += whole;
    given += whole;
    remainders.emplace_back(share[i] - whole, i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; given < remaining; ++k, ++given) {
    counts[remainders[k % remainders.size()].second] += 1;
  }
  return counts;
}

}  // namespace

Population init_population(const NeatConfig& cfg) {
  cfg.validate();
  Population pop;
  pop.rng = Rng(cfg.seed);
  pop.registry = InnovationRegistry(cfg.num_inputs + cfg.num_outputs, 0);
  std::uniform_real_distribution<double> weight(-1.0, 1.0);

  for (int i = 0; i < cfg.population; ++i) {
    Genome g;
    g.key = pop.next_genome_key++;
    for (int k = 0; k < cfg.num_inputs; ++k) {
      g.nodes.emplace(k, NodeGene{k, NodeKind::Input, 0.0, cfg.activation});
    }
    for (int k = cfg.num_inputs; k < cfg.num_inputs + cfg.num_outputs; ++k) {
      g.nodes.emplace(k, NodeGene{k, NodeKind::Output, 0.0, cfg.activation});
    }
    for (int in = 0; in < cfg.num_inputs; ++in) {
      for (int out = cfg.num_inputs; out < cfg.num_inputs + cfg.num_outputs; ++out) {
        const int innov = pop.registry.connection_innovation(in, out);
        g.connections.emplace(innov, ConnectionGene{in, out, weight(pop.rng), true, innov});
      }
    }
    pop.genomes.push_back(std::move(g));
  }
  pop.registry.new_generation();
  pop.species = speciate(pop.genomes, {}, cfg, 0, pop.next_species_id);
  return pop;
}

GenerationStats advance_generation(Population& pop, const NeatConfig& cfg) {
  if (pop.genomes.empty()) throw std::runtime_error("cannot advance an empty population");
  const int gen = pop.generation;

  std::map<int, const Genome*> by_key;
  for (const Genome& g : pop.genomes) {
    fitness_of(g);
    by_key[g.key] = &g;
  }

  // Current-generation statistics and stagnation bookkeeping.
  GenerationStats stats;
  stats.generation = gen;
  double total = 0.0;
  stats.best_fitness = -std::numeric_limits<double>::infinity();
  for (const Genome& g : pop.genomes) {
    total += *g.fitness;
    stats.best_fitness = std::max(stats.best_fitness, *g.fitness);
  }
  stats.mean_fitness = total / static_cast<double>(pop.genomes.size());

  std::vector<double> species_fitness;
  std::vector<double> species_mean;
  for (Species& s : pop.species) {
    double best = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int k : s.members) {
      best = std::max(best, *by_key.at(k)->fitness);
      sum += *by_key.at(k)->fitness;
    }
    if (best > s.best_fitness_ever) {
      s.best_fitness_ever = best;
      s.last_improved_generation = gen;
    }
    species_fitness.push_back(best);
    species_mean.push_back(sum / static_cast<double>(s.members.size()));
    stats.species.push_back(SpeciesStats{s.id, static_cast<int>(s.members.size()), best,
                                         gen - s.last_improved_generation});
  }
  stats.species_count = static_cast<int>(pop.species.size());

  // Rank species by fitness; the top species_elitism are immune to stagnation.
  std::vector<std::size_t> rank(pop.species.size());
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
    return species_fitness[a] > species_fitness[b];
  });
  std::vector<std::size_t> survivors;
  for (std::size_t r = 0; r < rank.size(); ++r) {
    const Species& s = pop.species[rank[r]];
    const bool protected_elite = static_cast<int>(r) < cfg.species_elitism;
    const bool stagnant = gen - s.last_improved_generation >= cfg.max_stagnation;
    if (protected_elite || !stagnant) survivors.push_back(rank[r]);
  }
  if (survivors.empty()) {
    throw std::runtime_error("every species stagnated; the population would become empty");
  }

  // Population elitism: best genomes overall carry over untouched.
  std::vector<const Genome*> ranked;
  for (const Genome& g : pop.genomes) ranked.push_back(&g);
  std::sort(ranked.begin(), ranked.end(), fitter_first);
  std::vector<Genome> next;
  const int elites = std::min<int>(cfg.population_elitism, static_cast<int>(ranked.size()));
  for (int i = 0; i < elites; ++i) next.push_back(*ranked[static_cast<std::size_t>(i)]);

  // Offspring quotas, proportional to species mean fitness.
  std::vector<double> weights;
  for (std::size_t i : survivors) weights.push_back(species_mean[i]);
  const std::vector<int> quota = apportion(weights, cfg.population - elites);

  pop.registry.new_generation();
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t si = 0; si < survivors.size(); ++si) {
    const Species& s = pop.species[survivors[si]];
    std::vector<const Genome*> members;
    for (int k : s.members) members.push_back(by_key.at(k));
    std::sort(members.begin(), members.end(), fitter_first);
    const auto pool_size = static_cast<std::size_t>(std::max(
        1.0, std::ceil(cfg.survival_threshold * static_cast<double>(members.size()))));
    members.resize(std::min(pool_size, members.size()));
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);

    for (int c = 0; c < quota[si]; ++c) {
      Genome child;
      const int key = pop.next_genome_key++;
      if (members.size() == 1) {
        child = *members.front();
        child.key = key;
        child.fitness.reset();
      } else {
        const Genome* a = members[pick(pop.rng)];
        const Genome* b = members[pick(pop.rng)];
        if (fitter_first(b, a)) std::swap(a, b);
        child = crossover(*a, *b, key, pop.rng, cfg.disabled_gene_rate);
      }
      mutate(child, cfg, pop.rng, pop.registry);
      next.push_back(std::move(child));
    }
  }

  std::vector<Species> carried;
  for (std::size_t i : survivors) carried.push_back(pop.species[i]);
  std::sort(carried.begin(), carried.end(),
            [](const Species& a, const Species& b) { return a.id < b.id; });

  pop.generation = gen + 1;
  pop.genomes = std::move(next);
  pop.species = speciate(pop.genomes, carried, cfg, pop.generation, pop.next_species_id);
  return stats;
}

void evaluate_population(Population& pop, const FitnessFn& fitness) {
  for (Genome& g : pop.genomes) {
    if (!g.fitness) g.fitness = fitness(g);
  }
}

RunResult run_neat(const NeatConfig& cfg, const FitnessFn& fitness,
                   const GenerationCallback& on_generation) {
  Population pop = init_population(cfg);
  RunResult result;
  auto keep_best = [&] {
    for (const Genome& g : pop.genomes) {
      if (!result.best.fitness || *g.fitness > *result.best.fitness) result.best = g;
    }
  };
  for (int gen = 0; gen < cfg.generations; ++gen) {
    evaluate_population(pop, fitness);
    keep_best();
    GenerationStats stats = advance_generation(pop, cfg);
    if (on_generation) on_generation(stats);
    result.stats.push_back(std::move(stats));
  }
  if (cfg.generations == 0) {
    evaluate_population(pop, fitness);
    keep_best();
  }
  return result;
}

}  // namespace autodrive::neat
