#pragma once

#include <map>
#include <utility>

namespace autodrive::neat {

// Hands out innovation numbers and node keys. Within one generation the same
// structural change (a new edge in->out, or a split of a given connection)
// maps to the same number in every genome; new_generation() forgets those
// signatures so later repeats get fresh, larger numbers.
class InnovationRegistry {
 public:
  InnovationRegistry() = default;
  InnovationRegistry(int next_node_key, int next_innovation)
      : next_node_(next_node_key), next_innovation_(next_innovation) {}

  int connection_innovation(int in_node, int out_node);
  int split_node(int split_innovation);
  int fresh_node_key() { return next_node_++; }
  int fresh_innovation() { return next_innovation_++; }

  void new_generation();

  int next_node_key() const { return next_node_; }
  int next_innovation() const { return next_innovation_; }

 private:
  int next_node_ = 0;
  int next_innovation_ = 0;
  std::map<std::pair<int, int>, int> connections_;
  std::map<int, int> splits_;
};

}  // namespace autodrive::neat
