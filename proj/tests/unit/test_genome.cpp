#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "autodrive/neat/genome_io.hpp"
#include "autodrive/neat/innovation.hpp"
#include "autodrive/neat/phenotype.hpp"
#include "fixtures.hpp"
#include "random_genomes.hpp"

using namespace autodrive::neat;

namespace {

void connect(Genome& g, int in, int out, double w, int innov, bool enabled = true) {
  g.connections.emplace(innov, ConnectionGene{in, out, w, enabled, innov});
}

// Independent DFS cycle check over the enabled edges.
bool has_cycle(const Genome& g) {
  std::map<int, int> colour;
  std::function<bool(int)> visit = [&](int n) {
    colour[n] = 1;
    for (const auto& [i, c] : g.connections) {
      if (!c.enabled || c.in_node != n) continue;
      if (colour[c.out_node] == 1) return true;
      if (colour[c.out_node] == 0 && visit(c.out_node)) return true;
    }
    colour[n] = 2;
    return false;
  };
  for (const auto& [k, n] : g.nodes) {
    if (colour[k] == 0 && visit(k)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Genome::validate") {
  Genome g = fixtures::bare_genome();
  CHECK_NOTHROW(g.validate());
  connect(g, 0, 5, 0.5, 0);
  CHECK_NOTHROW(g.validate());
  SUBCASE("dangling endpoint") {
    connect(g, 0, 42, 0.5, 1);
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  }
  SUBCASE("self loop") {
    connect(g, 5, 5, 0.5, 1);
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  }
  SUBCASE("duplicate signature") {
    connect(g, 0, 5, 0.1, 1);
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  }
  SUBCASE("cycle through hidden nodes") {
    g.nodes.emplace(9, NodeGene{9, NodeKind::Hidden, 0.0});
    g.nodes.emplace(10, NodeGene{10, NodeKind::Hidden, 0.0});
    connect(g, 9, 10, 1, 1);
    connect(g, 10, 9, 1, 2);
    CHECK_FALSE(is_acyclic(g));
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  }
  SUBCASE("edge into an input") {
    connect(g, 5, 0, 1, 1);
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  }
}

TEST_CASE("reaches and has_edge") {
  Genome g = fixtures::bare_genome();
  g.nodes.emplace(9, NodeGene{9, NodeKind::Hidden, 0.0});
  connect(g, 0, 9, 1, 0);
  connect(g, 9, 5, 1, 1, false);
  CHECK(g.has_edge(0, 9));
  CHECK_FALSE(g.has_edge(9, 0));
  CHECK(g.reaches(0, 5));
  CHECK_FALSE(g.reaches(0, 5, true));
  CHECK(g.input_keys() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(g.output_keys() == std::vector<int>{5, 6, 7, 8});
  CHECK(g.hidden_keys() == std::vector<int>{9});
}

TEST_CASE("phenotype examples") {
  Genome g = fixtures::bare_genome();
  const std::array<double, 5> ones{1, 1, 1, 1, 1};
  SUBCASE("all-zero network outputs zero") {
    for (int i = 0; i < 5; ++i) connect(g, i, 5 + i % 4, 0.0, i);
    for (double o : Phenotype::build(g).activate(ones)) CHECK(o == 0.0);
  }
  SUBCASE("single path with weight 0.5") {
    connect(g, 0, 5, 0.5, 0);
    const auto out = Phenotype::build(g).activate(std::array<double, 5>{1, 0, 0, 0, 0});
    CHECK(out.size() == 4);
    CHECK(out[0] == doctest::Approx(0.46212).epsilon(1e-5));
    CHECK(out[0] == std::tanh(0.5));
  }
  SUBCASE("disabled genes are ignored") {
    connect(g, 0, 5, 3.0, 0, false);
    CHECK(Phenotype::build(g).activate(ones)[0] == 0.0);
  }
  SUBCASE("hidden layer") {
    g.nodes.emplace(9, NodeGene{9, NodeKind::Hidden, 0.1});
    connect(g, 0, 9, 2.0, 0);
    connect(g, 1, 9, -1.0, 1);
    connect(g, 9, 6, 0.7, 2);
    g.nodes.at(6).bias = -0.2;
    const auto out = Phenotype::build(g).activate(std::array<double, 5>{0.3, 0.4, 0, 0, 0});
    const double h = std::tanh(0.1 + 2.0 * 0.3 - 1.0 * 0.4);
    CHECK(out[1] == doctest::Approx(std::tanh(-0.2 + 0.7 * h)).epsilon(1e-15));
  }
  SUBCASE("wrong input count") {
    CHECK_THROWS_AS(Phenotype::build(g).activate(std::array<double, 3>{}), std::invalid_argument);
  }
}

TEST_CASE("phenotype plans are topologically ordered and outputs stay in [-1, 1]") {
  const auto genomes = randgen::grown(60, 25, 17);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> in(-5, 5);
  for (const Genome& g : genomes) {
    const Phenotype p = Phenotype::build(g);
    std::map<int, int> position;
    for (std::size_t i = 0; i < p.plan().size(); ++i) position[p.plan()[i].node_key] = static_cast<int>(i);
    for (const auto& [i, c] : g.connections) {
      if (!c.enabled || !position.count(c.out_node) || !position.count(c.in_node)) continue;
      REQUIRE(position[c.in_node] < position[c.out_node]);
    }
    for (int k = 0; k < 10; ++k) {
      std::array<double, 5> x{};
      for (double& v : x) v = in(rng);
      for (double o : p.activate(x)) {
        REQUIRE(o >= -1.0);
        REQUIRE(o <= 1.0);
      }
    }
  }
}

TEST_CASE("innovation registry") {
  InnovationRegistry reg(9, 0);
  const int a = reg.connection_innovation(0, 5);
  CHECK(reg.connection_innovation(0, 5) == a);
  const int b = reg.connection_innovation(1, 5);
  CHECK(b != a);
  const int n = reg.split_node(a);
  CHECK(n == 9);
  CHECK(reg.split_node(a) == n);
  reg.new_generation();
  const int a2 = reg.connection_innovation(0, 5);
  CHECK(a2 > b);
  CHECK(reg.split_node(a) > n);
}

TEST_CASE("genome JSON round-trip on random genomes") {
  const auto genomes = randgen::grown(100, 12, 23);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> f(-1, 10);
  for (std::size_t i = 0; i < genomes.size(); ++i) {
    Genome g = genomes[i];
    if (i % 3 != 0) g.fitness = f(rng);
    const auto j = genome_to_json(g);
    const Genome back = genome_from_json(nlohmann::ordered_json::parse(j.dump()));
    REQUIRE(back == g);
  }
  const auto dir = fixtures::temp_dir("genome_io");
  save_genome(genomes[5], dir / "g.json");
  CHECK(load_genome(dir / "g.json") == genomes[5]);
}

TEST_CASE("genome JSON rejects malformed input") {
  Genome g = fixtures::bare_genome();
  connect(g, 0, 5, 0.5, 0);
  auto j = genome_to_json(g);
  SUBCASE("dangling connection") {
    j["connections"][0]["out"] = 77;
    CHECK_THROWS_AS(genome_from_json(j), std::invalid_argument);
  }
  SUBCASE("missing field") {
    j["nodes"][0].erase("bias");
    CHECK_THROWS_AS(genome_from_json(j), std::runtime_error);
  }
  SUBCASE("bad kind") {
    j["nodes"][0]["kind"] = "sensor";
    CHECK_THROWS_AS(genome_from_json(j), std::runtime_error);
  }
  SUBCASE("duplicate innovation") {
    j["connections"].push_back(j["connections"][0]);
    CHECK_THROWS_AS(genome_from_json(j), std::runtime_error);
  }
}

TEST_CASE("mutated genomes stay valid and acyclic") {
  for (const Genome& g : randgen::grown(200, 30, 5)) {
    REQUIRE_NOTHROW(g.validate());
    REQUIRE_FALSE(has_cycle(g));
  }
}
