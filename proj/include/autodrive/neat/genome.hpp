#pragma once

#include <map>
#include <optional>
#include <vector>

#include "autodrive/neat/config.hpp"

namespace autodrive::neat {

enum class NodeKind { Input, Hidden, Output };

struct NodeGene {
  int key = 0;
  NodeKind kind = NodeKind::Hidden;
  double bias = 0.0;
  Activation activation = Activation::Tanh;
  bool operator==(const NodeGene&) const = default;
};

struct ConnectionGene {
  int in_node = 0;
  int out_node = 0;
  double weight = 0.0;
  bool enabled = true;
  int innovation = 0;
  bool operator==(const ConnectionGene&) const = default;
};

// Nodes are keyed by node key and connections by innovation number, so
// iteration order is deterministic and matches historical order.
struct Genome {
  int key = 0;
  std::map<int, NodeGene> nodes;
  std::map<int, ConnectionGene> connections;
  std::optional<double> fitness;

  std::vector<int> keys_of(NodeKind kind) const;
  std::vector<int> input_keys() const { return keys_of(NodeKind::Input); }
  std::vector<int> output_keys() const { return keys_of(NodeKind::Output); }
  std::vector<int> hidden_keys() const { return keys_of(NodeKind::Hidden); }

  // Any gene, enabled or not, from in_node to out_node.
  bool has_edge(int in_node, int out_node) const;

  // Whether a directed path from -> to exists. With enabled_only false the
  // disabled genes count too, which is the graph crossover can re-enable.
  bool reaches(int from, int to, bool enabled_only = false) const;

  // Throws std::invalid_argument on dangling endpoints, self loops, duplicate
  // signatures or a cycle.
  void validate() const;

  bool operator==(const Genome&) const = default;
};

bool is_acyclic(const Genome& g, bool enabled_only = false);

}  // namespace autodrive::neat
