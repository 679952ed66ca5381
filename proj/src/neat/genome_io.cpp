#include "autodrive/neat/genome_io.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace autodrive::neat {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Input: return "input";
    case NodeKind::Hidden: return "hidden";
    case NodeKind::Output: return "output";
  }
  return "?";
}

NodeKind parse_kind(const std::string& s) {
  if (s == "input") return NodeKind::Input;
  if (s == "hidden") return NodeKind::Hidden;
  if (s == "output") return NodeKind::Output;
  throw std::runtime_error("unknown node kind '" + s + "'");
}

template <class T>
T field(const ordered_json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw std::runtime_error(std::string("genome file: missing field '") + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::runtime_error(std::string("genome file: field '") + key + "' has the wrong type");
  }
}

}  // namespace

ordered_json genome_to_json(const Genome& g) {
  ordered_json j;
  j["key"] = g.key;
  j["fitness"] = g.fitness ? ordered_json(*g.fitness) : ordered_json(nullptr);
  ordered_json nodes = ordered_json::array();
  for (const auto& [k, n] : g.nodes) {
    nodes.push_back({{"key", n.key},
                     {"kind", kind_name(n.kind)},
                     {"bias", n.bias},
                     {"activation", std::string(to_string(n.activation))}});
  }
  j["nodes"] = std::move(nodes);
  ordered_json conns = ordered_json::array();
  for (const auto& [innov, c] : g.connections) {
    conns.push_back({{"innovation", c.innovation},
                     {"in", c.in_node},
                     {"out", c.out_node},
                     {"weight", c.weight},
                     {"enabled", c.enabled}});
  }
  j["connections"] = std::move(conns);
  return j;
}

Genome genome_from_json(const ordered_json& j) {
  Genome g;
  g.key = field<int>(j, "key");
  if (j.contains("fitness") && !j["fitness"].is_null()) g.fitness = field<double>(j, "fitness");
  if (!j.contains("nodes") || !j["nodes"].is_array() || !j.contains("connections") ||
      !j["connections"].is_array()) {
    throw std::runtime_error("genome file: 'nodes' and 'connections' must be arrays");
  }
  for (const auto& n : j["nodes"]) {
    NodeGene gene{field<int>(n, "key"), parse_kind(field<std::string>(n, "kind")),
                  field<double>(n, "bias"), Activation::Tanh};
    const auto act = field<std::string>(n, "activation");
    if (act != "tanh") throw std::runtime_error("genome file: unsupported activation '" + act + "'");
    if (!g.nodes.emplace(gene.key, gene).second) {
      throw std::runtime_error("genome file: duplicate node key " + std::to_string(gene.key));
    }
  }
  for (const auto& c : j["connections"]) {
    ConnectionGene gene{field<int>(c, "in"), field<int>(c, "out"), field<double>(c, "weight"),
                        field<bool>(c, "enabled"), field<int>(c, "innovation")};
    if (!g.connections.emplace(gene.innovation, gene).second) {
      throw std::runtime_error("genome file: duplicate innovation " + std::to_string(gene.innovation));
    }
  }
  g.validate();
  return g;
}

void save_genome(const Genome& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << genome_to_json(g).dump(2) << "\n";
}

Genome load_genome(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  return genome_from_json(j);
}

}  // namespace autodrive::neat
