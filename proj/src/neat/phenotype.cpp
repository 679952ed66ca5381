#include "autodrive/neat/phenotype.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace autodrive::neat {

double apply_activation(Activation a, double x) {
  switch (a) {
    case Activation::Tanh: return std::tanh(x);
  }
  return x;
}

Phenotype Phenotype::build(const Genome& g) {
  Phenotype p;
  p.input_keys_ = g.input_keys();
  p.output_keys_ = g.output_keys();

  std::map<int, std::vector<const ConnectionGene*>> incoming;
  for (const auto& [innov, c] : g.connections) {
    if (c.enabled) incoming[c.out_node].push_back(&c);
  }

  // Non-input nodes that can influence an output.
  std::set<int> required;
  std::vector<int> stack(p.output_keys_.begin(), p.output_keys_.end());
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    if (g.nodes.at(node).kind == NodeKind::Input || !required.insert(node).second) continue;
    for (const ConnectionGene* c : incoming[node]) stack.push_back(c->in_node);
  }

  std::map<int, int> slot;
  for (int k : p.input_keys_) slot[k] = static_cast<int>(slot.size());

  // Kahn's algorithm, smallest key first for a stable plan.
  std::map<int, int> pending;
  std::map<int, std::vector<int>> dependants;
  for (int node : required) {
    int deps = 0;
    for (const ConnectionGene* c : incoming[node]) {
      if (required.contains(c->in_node)) {
        ++deps;
        dependants[c->in_node].push_back(node);
      }
    }
    pending[node] = deps;
  }
  std::set<int> ready;
  for (const auto& [node, deps] : pending) {
    if (deps == 0) ready.insert(node);
  }
  while (!ready.empty()) {
    const int node = *ready.begin();
    ready.erase(ready.begin());
    slot[node] = static_cast<int>(slot.size());
    const NodeGene& gene = g.nodes.at(node);
    Step step{node, slot[node], gene.bias, gene.activation, {}};
    for (const ConnectionGene* c : incoming[node]) {
      step.incoming.push_back({slot.at(c->in_node), c->weight});
    }
    p.plan_.push_back(std::move(step));
    for (int d : dependants[node]) {
      if (--pending[d] == 0) ready.insert(d);
    }
  }
  if (p.plan_.size() != required.size()) {
    throw std::invalid_argument("genome " + std::to_string(g.key) +
                                " has a cycle among its enabled connections");
  }
  for (int k : p.output_keys_) p.output_slots_.push_back(slot.at(k));
  p.slot_count_ = static_cast<int>(slot.size());
  return p;
}

std::vector<double> Phenotype::activate(std::span<const double> inputs) const {
  if (inputs.size() != input_keys_.size()) {
    throw std::invalid_argument("phenotype expects " + std::to_string(input_keys_.size()) +
                                " inputs, got " + std::to_string(inputs.size()));
  }
  std::vector<double> values(static_cast<std::size_t>(slot_count_), 0.0);
  std::copy(inputs.begin(), inputs.end(), values.begin());
  for (const Step& s : plan_) {
    double sum = s.bias;
    for (const Incoming& in : s.incoming) sum += in.weight * values[static_cast<std::size_t>(in.source)];
    values[static_cast<std::size_t>(s.slot)] = apply_activation(s.activation, sum);
  }
  std::vector<double> out;
  out.reserve(output_slots_.size());
  for (int s : output_slots_) out.push_back(values[static_cast<std::size_t>(s)]);
  return out;
}

}  // namespace autodrive::neat
