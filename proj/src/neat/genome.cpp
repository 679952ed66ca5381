#include "autodrive/neat/genome.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace autodrive::neat {

std::vector<int> Genome::keys_of(NodeKind kind) const {
  std::vector<int> out;
  for (const auto& [k, n] : nodes) {
    if (n.kind == kind) out.push_back(k);
  }
  return out;
}

bool Genome::has_edge(int in_node, int out_node) const {
  for (const auto& [innov, c] : connections) {
    if (c.in_node == in_node && c.out_node == out_node) return true;
  }
  return false;
}

bool Genome::reaches(int from, int to, bool enabled_only) const {
  if (from == to) return true;
  std::set<int> seen{from};
  std::vector<int> stack{from};
  while (!stack.empty()) {
    const int node = stack.back();
    stack.pop_back();
    for (const auto& [innov, c] : connections) {
      if (c.in_node != node || (enabled_only && !c.enabled)) continue;
      if (c.out_node == to) return true;
      if (seen.insert(c.out_node).second) stack.push_back(c.out_node);
    }
  }
  return false;
}

bool is_acyclic(const Genome& g, bool enabled_only) {
  // Iterative three-colour DFS.
  enum class Mark { White, Grey, Black };
  std::map<int, Mark> mark;
  std::map<int, std::vector<int>> succ;
  for (const auto& [k, n] : g.nodes) mark[k] = Mark::White;
  for (const auto& [innov, c] : g.connections) {
    if (enabled_only && !c.enabled) continue;
    succ[c.in_node].push_back(c.out_node);
    mark.try_emplace(c.in_node, Mark::White);
    mark.try_emplace(c.out_node, Mark::White);
  }
  for (auto& [root, m] : mark) {
    if (m != Mark::White) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::Grey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto& out = succ[node];
      if (next < out.size()) {
        const int child = out[next++];
        if (mark[child] == Mark::Grey) return false;
        if (mark[child] == Mark::White) {
          mark[child] = Mark::Grey;
          stack.emplace_back(child, 0);
        }
      } else {
        mark[node] = Mark::Black;
        stack.pop_back();
      }
    }
  }
  return true;
}

void Genome::validate() const {
  std::set<std::pair<int, int>> signatures;
  for (const auto& [k, n] : nodes) {
    if (n.key != k) throw std::invalid_argument("node gene key mismatch at " + std::to_string(k));
  }
  for (const auto& [innov, c] : connections) {
    if (c.innovation != innov) {
      throw std::invalid_argument("connection gene innovation mismatch at " + std::to_string(innov));
    }
    if (!nodes.contains(c.in_node) || !nodes.contains(c.out_node)) {
      throw std::invalid_argument("connection " + std::to_string(innov) +
                                  " references a missing node");
    }
    if (c.in_node == c.out_node) {
      throw std::invalid_argument("connection " + std::to_string(innov) + " is a self loop");
    }
    if (nodes.at(c.out_node).kind == NodeKind::Input) {
      throw std::invalid_argument("connection " + std::to_string(innov) + " targets an input node");
    }
    if (!signatures.insert({c.in_node, c.out_node}).second) {
      throw std::invalid_argument("duplicate connection " + std::to_string(c.in_node) + "->" +
                                  std::to_string(c.out_node));
    }
  }
  if (!is_acyclic(*this)) throw std::invalid_argument("genome connection graph has a cycle");
}

}  // namespace autodrive::neat
