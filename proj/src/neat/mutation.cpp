#include "autodrive/neat/mutation.hpp"

#include <array>
#include <iterator>

namespace autodrive::neat {

namespace {

constexpr std::array<Activation, 1> kActivations = {Activation::Tanh};

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

template <class Seq>
auto pick(const Seq& seq, Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, seq.size() - 1);
  return *std::next(seq.begin(), static_cast<std::ptrdiff_t>(d(rng)));
}

int unused_innovation(const Genome& g, int candidate, InnovationRegistry& registry) {
  while (g.connections.contains(candidate)) candidate = registry.fresh_innovation();
  return candidate;
}

}  // namespace

void mutate_add_node(Genome& g, Rng& rng, InnovationRegistry& registry) {
  std::vector<int> enabled;
  for (const auto& [innov, c] : g.connections) {
    if (c.enabled) enabled.push_back(innov);
  }
  if (enabled.empty()) return;
  ConnectionGene& split = g.connections.at(pick(enabled, rng));
  split.enabled = false;
  const ConnectionGene old = split;

  int node = registry.split_node(old.innovation);
  while (g.nodes.contains(node)) node = registry.fresh_node_key();
  g.nodes.emplace(node, NodeGene{node, NodeKind::Hidden, 0.0, Activation::Tanh});

  const int in_innov =
      unused_innovation(g, registry.connection_innovation(old.in_node, node), registry);
  g.connections.emplace(in_innov, ConnectionGene{old.in_node, node, 1.0, true, in_innov});
  const int out_innov =
      unused_innovation(g, registry.connection_innovation(node, old.out_node), registry);
  g.connections.emplace(out_innov, ConnectionGene{node, old.out_node, old.weight, true, out_innov});
}

void mutate_delete_node(Genome& g, Rng& rng) {
  const std::vector<int> hidden = g.hidden_keys();
  if (hidden.empty()) return;
  const int victim = pick(hidden, rng);
  g.nodes.erase(victim);
  std::erase_if(g.connections, [victim](const auto& kv) {
    return kv.second.in_node == victim || kv.second.out_node == victim;
  });
}

void mutate_add_connection(Genome& g, Rng& rng, InnovationRegistry& registry, int attempts) {
  std::vector<int> sources;
  std::vector<int> targets;
  for (const auto& [k, n] : g.nodes) {
    sources.push_back(k);
    if (n.kind != NodeKind::Input) targets.push_back(k);
  }
  if (sources.empty() || targets.empty()) return;
  for (int i = 0; i < attempts; ++i) {
    const int u = pick(sources, rng);
    const int v = pick(targets, rng);
    if (u == v || g.has_edge(u, v) || g.reaches(v, u)) continue;
    const int innov = unused_innovation(g, registry.connection_innovation(u, v), registry);
    const double w = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    g.connections.emplace(innov, ConnectionGene{u, v, w, true, innov});
    return;
  }
}

void mutate_delete_connection(Genome& g, Rng& rng) {
  if (g.connections.empty()) return;
  std::uniform_int_distribution<std::size_t> d(0, g.connections.size() - 1);
  g.connections.erase(std::next(g.connections.begin(), static_cast<std::ptrdiff_t>(d(rng))));
}

void mutate_weights_and_activation(Genome& g, const NeatConfig& cfg, Rng& rng) {
  std::normal_distribution<double> perturb(0.0, cfg.weight_perturb_power);
  std::uniform_real_distribution<double> redraw(-1.0, 1.0);
  auto mutate_value = [&](double& v) {
    if (uniform01(rng) >= cfg.weight_mutate_rate) return;
    if (uniform01(rng) < cfg.weight_replace_rate) {
      v = redraw(rng);
    } else {
      v += perturb(rng);
    }
  };
  for (auto& [innov, c] : g.connections) mutate_value(c.weight);
  for (auto& [k, n] : g.nodes) {
    if (n.kind == NodeKind::Input) continue;
    mutate_value(n.bias);
    if (uniform01(rng) < cfg.activation_mutate_rate) n.activation = pick(kActivations, rng);
  }
}

void mutate(Genome& g, const NeatConfig& cfg, Rng& rng, InnovationRegistry& registry) {
  if (uniform01(rng) < cfg.node_add_prob) mutate_add_node(g, rng, registry);
  if (uniform01(rng) < cfg.node_delete_prob) mutate_delete_node(g, rng);
  if (uniform01(rng) < cfg.conn_add_prob) {
    mutate_add_connection(g, rng, registry, cfg.add_connection_attempts);
  }
  if (uniform01(rng) < cfg.conn_delete_prob) mutate_delete_connection(g, rng);
  mutate_weights_and_activation(g, cfg, rng);
}

}  // namespace autodrive::neat
