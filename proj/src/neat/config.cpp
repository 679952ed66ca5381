#include "autodrive/neat/config.hpp"

#include <stdexcept>
#include <string>

namespace autodrive::neat {

namespace {
void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid NeatConfig: " + what);
}
bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }
}  // namespace

std::string_view to_string(Activation) { return "tanh"; }

void NeatConfig::validate() const {
  require(population >= 1, "population < 1");
  require(generations >= 0, "generations < 0");
  require(num_inputs >= 1 && num_outputs >= 1, "need at least one input and one output");
  for (auto [name, p] : {std::pair{"activation_mutate_rate", activation_mutate_rate},
                         std::pair{"node_add_prob", node_add_prob},
                         std::pair{"node_delete_prob", node_delete_prob},
                         std::pair{"conn_add_prob", conn_add_prob},
                         std::pair{"conn_delete_prob", conn_delete_prob},
                         std::pair{"weight_mutate_rate", weight_mutate_rate},
                         std::pair{"weight_replace_rate", weight_replace_rate},
                         std::pair{"survival_threshold", survival_threshold},
                         std::pair{"disabled_gene_rate", disabled_gene_rate}}) {
    require(is_probability(p), std::string(name) + " outside [0, 1]");
  }
  require(weight_perturb_power >= 0.0, "weight_perturb_power < 0");
  require(compat_threshold > 0.0, "compat_threshold must be positive");
  require(compat_coeff_disjoint >= 0.0 && compat_coeff_weight >= 0.0,
          "compatibility coefficients must be non-negative");
  require(max_stagnation >= 1, "max_stagnation < 1");
  require(species_elitism >= 0, "species_elitism < 0");
  require(population_elitism >= 0, "population_elitism < 0");
  require(population >= 2 * population_elitism, "population < 2 * population_elitism");
  require(add_connection_attempts >= 1, "add_connection_attempts < 1");
  require(eval_lap_limit >= 1, "eval_lap_limit < 1");
}

void to_json(nlohmann::json& j, const NeatConfig& c) {
  j = nlohmann::json{
      {"population", c.population},
      {"generations", c.generations},
      {"num_inputs", c.num_inputs},
      {"num_outputs", c.num_outputs},
      {"activation", std::string(to_string(c.activation))},
      {"activation_mutate_rate", c.activation_mutate_rate},
      {"node_add_prob", c.node_add_prob},
      {"node_delete_prob", c.node_delete_prob},
      {"conn_add_prob", c.conn_add_prob},
      {"conn_delete_prob", c.conn_delete_prob},
      {"weight_mutate_rate", c.weight_mutate_rate},
      {"weight_perturb_power", c.weight_perturb_power},
      {"weight_replace_rate", c.weight_replace_rate},
      {"compat_threshold", c.compat_threshold},
      {"compat_coeff_disjoint", c.compat_coeff_disjoint},
      {"compat_coeff_weight", c.compat_coeff_weight},
      {"max_stagnation", c.max_stagnation},
      {"species_elitism", c.species_elitism},
      {"population_elitism", c.population_elitism},
      {"fitness_criterion", "max"},
      {"species_fitness_criterion", "max"},
      {"survival_threshold", c.survival_threshold},
      {"disabled_gene_rate", c.disabled_gene_rate},
      {"add_connection_attempts", c.add_connection_attempts},
      {"eval_lap_limit", c.eval_lap_limit},
      {"seed", c.seed},
  };
}

void from_json(const nlohmann::json& j, NeatConfig& c) {
  if (!j.is_object()) throw std::invalid_argument("NeatConfig must be a JSON object");
  auto criterion = [](const nlohmann::json& v, const std::string& key) {
    const auto s = v.get<std::string>();
    if (s != "max" && s != "Max") throw std::invalid_argument(key + " supports only 'max'");
    return FitnessCriterion::Max;
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "population") c.population = v.get<int>();
    else if (key == "generations") c.generations = v.get<int>();
    else if (key == "num_inputs") c.num_inputs = v.get<int>();
    else if (key == "num_outputs") c.num_outputs = v.get<int>();
    else if (key == "activation") {
      const auto s = v.get<std::string>();
      if (s != "tanh" && s != "Tanh") throw std::invalid_argument("unsupported activation '" + s + "'");
      c.activation = Activation::Tanh;
    } else if (key == "activation_mutate_rate") c.activation_mutate_rate = v.get<double>();
    else if (key == "node_add_prob") c.node_add_prob = v.get<double>();
    else if (key == "node_delete_prob") c.node_delete_prob = v.get<double>();
    else if (key == "conn_add_prob") c.conn_add_prob = v.get<double>();
    else if (key == "conn_delete_prob") c.conn_delete_prob = v.get<double>();
    else if (key == "weight_mutate_rate") c.weight_mutate_rate = v.get<double>();
    else if (key == "weight_perturb_power") c.weight_perturb_power = v.get<double>();
    else if (key == "weight_replace_rate") c.weight_replace_rate = v.get<double>();
    else if (key == "compat_threshold") c.compat_threshold = v.get<double>();
    else if (key == "compat_coeff_disjoint") c.compat_coeff_disjoint = v.get<double>();
    else if (key == "compat_coeff_weight") c.compat_coeff_weight = v.get<double>();
    else if (key == "max_stagnation") c.max_stagnation = v.get<int>();
    else if (key == "species_elitism") c.species_elitism = v.get<int>();
    else if (key == "population_elitism") c.population_elitism = v.get<int>();
    else if (key == "fitness_criterion") c.fitness_criterion = criterion(v, key);
    else if (key == "species_fitness_criterion") c.species_fitness_criterion = criterion(v, key);
    else if (key == "survival_threshold") c.survival_threshold = v.get<double>();
    else if (key == "disabled_gene_rate") c.disabled_gene_rate = v.get<double>();
    else if (key == "add_connection_attempts") c.add_connection_attempts = v.get<int>();
    else if (key == "eval_lap_limit") c.eval_lap_limit = v.get<int>();
    else if (key == "seed") c.seed = v.get<std::uint64_t>();
    else throw std::invalid_argument("unknown NeatConfig field '" + key + "'");
  }
  c.validate();
}

}  // namespace autodrive::neat
