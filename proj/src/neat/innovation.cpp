#include "autodrive/neat/innovation.hpp"

namespace autodrive::neat {

int InnovationRegistry::connection_innovation(int in_node, int out_node) {
  const auto [it, inserted] = connections_.try_emplace({in_node, out_node}, next_innovation_);
  if (inserted) ++next_innovation_;
  return it->second;
}

int InnovationRegistry::split_node(int split_innovation) {
  const auto [it, inserted] = splits_.try_emplace(split_innovation, next_node_);
  if (inserted) ++next_node_;
  return it->second;
}

void InnovationRegistry::new_generation() {
  connections_.clear();
  splits_.clear();
}

}  // namespace autodrive::neat
