#pragma once

#include <span>
#include <vector>

#include "autodrive/neat/genome.hpp"

namespace autodrive::neat {

// Feed-forward evaluation plan compiled from a genome's enabled genes.
class Phenotype {
 public:
  struct Incoming {
    int source;  // slot index
    double weight;
  };
  struct Step {
    int node_key;
    int slot;
    double bias;
    Activation activation;
    std::vector<Incoming> incoming;
  };

  // Throws std::invalid_argument when the enabled graph has a cycle.
  static Phenotype build(const Genome& g);

  // Inputs pass through unchanged; every computed node applies
  // act(bias + sum(weight * source)). Throws std::invalid_argument when the
  // input count is wrong.
  std::vector<double> activate(std::span<const double> inputs) const;

  const std::vector<int>& input_keys() const { return input_keys_; }
  const std::vector<int>& output_keys() const { return output_keys_; }
  const std::vector<Step>& plan() const { return plan_; }

 private:
  std::vector<int> input_keys_;
  std::vector<int> output_keys_;
  std::vector<int> output_slots_;
  std::vector<Step> plan_;
  int slot_count_ = 0;
};

inline Phenotype build_phenotype(const Genome& g) { return Phenotype::build(g); }

double apply_activation(Activation a, double x);

}  // namespace autodrive::neat
