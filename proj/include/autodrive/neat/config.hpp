#pragma once

#include <cstdint>
#include <string_view>

#include "json.hpp"

namespace autodrive::neat {

enum class Activation { Tanh };
enum class FitnessCriterion { Max };

std::string_view to_string(Activation a);

struct NeatConfig {
  int population = 200;
  int generations = 100;
  int num_inputs = 5;
  int num_outputs = 4;
  Activation activation = Activation::Tanh;
  double activation_mutate_rate = 0.02;
  double node_add_prob = 0.2;
  double node_delete_prob = 0.2;
  double conn_add_prob = 0.5;
  double conn_delete_prob = 0.5;
  double weight_mutate_rate = 0.8;
  double weight_perturb_power = 0.5;
  double weight_replace_rate = 0.1;   // share of weight mutations that redraw from [-1, 1]
  double compat_threshold = 3.0;
  double compat_coeff_disjoint = 1.0;
  double compat_coeff_weight = 0.5;
  int max_stagnation = 10;
  int species_elitism = 1;
  int population_elitism = 2;
  FitnessCriterion fitness_criterion = FitnessCriterion::Max;
  FitnessCriterion species_fitness_criterion = FitnessCriterion::Max;
  double survival_threshold = 0.2;    // parent pool = top share of each species
  double disabled_gene_rate = 0.75;   // gene disabled in either parent stays disabled
  int add_connection_attempts = 20;
  int eval_lap_limit = 3;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument on out-of-range fields.
  void validate() const;
  bool operator==(const NeatConfig&) const = default;
};

// Every field is written; unknown keys are rejected on read.
void to_json(nlohmann::json& j, const NeatConfig& cfg);
void from_json(const nlohmann::json& j, NeatConfig& cfg);

}  // namespace autodrive::neat
