#include "doctest.h"

#include <stdexcept>

#include <fstream>
#include <regex>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

#include "autodrive/harness/compare.hpp"
#include "autodrive/harness/csv.hpp"
#include "autodrive/harness/experiment.hpp"
#include "autodrive/harness/plot.hpp"
#include "fixtures.hpp"

using namespace autodrive;
using namespace autodrive::harness;

namespace {

std::vector<qlearn::EpisodeRecord> fake_episodes(int n) {
  std::vector<qlearn::EpisodeRecord> out;
  for (int i = 0; i < n; ++i) {
    qlearn::EpisodeRecord r;
    r.episode = i;
    r.total_reward = (i % 7) * 10.0 - 1000.0 + i * 0.5;
    r.steps = 10 + i;
    r.distance = 12.5 * i;
    r.checkpoints_hit = i % 4;
    r.epsilon = 1.0 / (1 + i);
    r.lr = 0.1;
    r.terminal = i % 3 ? qlearn::Terminal::Crashed : qlearn::Terminal::Truncated;
    out.push_back(r);
  }
  return out;
}

std::vector<neat::GenerationStats> fake_generations(int n) {
  std::vector<neat::GenerationStats> out;
  for (int g = 0; g < n; ++g) {
    neat::GenerationStats s;
    s.generation = g;
    s.best_fitness = 0.1 * g;
    s.mean_fitness = 0.05 * g;
    s.species = {{0, 10, 0.1 * g, 0}, {g % 2 ? 3 : 1, 5, 0.02 * g, g}};
    s.species_count = 2;
    out.push_back(s);
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Points inside the single polyline of an SVG.
std::size_t polyline_points(const std::string& svg) {
  const std::regex re("<polyline[^>]*points=\"([^\"]*)\"");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, re));
  std::istringstream in(m[1].str());
  std::string pt;
  std::size_t n = 0;
  while (in >> pt) ++n;
  return n;
}

}  // namespace

TEST_CASE("format_number round-trips") {
  for (double v : {0.0, -1000.0, 0.1, 1e-6 * 3.0, 123456.789, -0.000123}) {
    CHECK(std::stod(format_number(v)) == v);
  }
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(42LL) == "42");
  CHECK_THROWS(format_number(std::numeric_limits<double>::quiet_NaN()));
}

TEST_CASE("episode tables follow the schema and round-trip") {
  const auto recs = fake_episodes(250);
  const CsvTable t = episodes_table(recs);
  CHECK(t.header == kEpisodeColumns);
  REQUIRE(t.rows.size() == 250);
  CHECK(t.rows[1][8] == "Crashed");
  CHECK(t.rows[0][8] == "Truncated");

  const auto dir = fixtures::temp_dir("csv");
  write_csv(dir / "train.csv", t, kEpisodeColumns);
  const CsvTable back = read_csv(dir / "train.csv");
  CHECK(back == t);
  const auto rewards = back.numbers("total_reward");
  for (std::size_t i = 0; i < recs.size(); ++i) CHECK(rewards[i] == recs[i].total_reward);

  const CsvTable avg = block_average_table(recs, 100);
  CHECK(avg.header == kAvg100Columns);
  REQUIRE(avg.rows.size() == 3);
  double first = 0.0, last = 0.0;
  for (int i = 0; i < 100; ++i) first += recs[static_cast<std::size_t>(i)].total_reward;
  for (int i = 200; i < 250; ++i) last += recs[static_cast<std::size_t>(i)].total_reward;
  const auto means = avg.numbers("mean_reward");
  CHECK(means[0] == doctest::Approx(first / 100).epsilon(1e-12));
  CHECK(means[2] == doctest::Approx(last / 50).epsilon(1e-12));
  CHECK(avg.numbers("first_episode") == std::vector<double>{0, 100, 200});
}

TEST_CASE("generation and species tables") {
  const auto stats = fake_generations(5);
  const CsvTable g = generations_table(stats);
  CHECK(g.header == kGenerationColumns);
  CHECK(g.rows.size() == 5);
  const CsvTable s = species_table(stats);
  CHECK(s.header == kSpeciesColumns);
  CHECK(s.rows.size() == 10);
}

TEST_CASE("schema violations are rejected") {
  CsvTable t = episodes_table(fake_episodes(3));
  CHECK_NOTHROW(validate_table(t, kEpisodeColumns));
  CHECK_THROWS_AS(validate_table(t, kAvg100Columns), std::runtime_error);
  CsvTable short_row = t;
  short_row.rows[1].pop_back();
  CHECK_THROWS_AS(validate_table(short_row, kEpisodeColumns), std::runtime_error);
  CsvTable comma = t;
  comma.rows[0][0] = "1,2";
  CHECK_THROWS_AS(validate_table(comma, kEpisodeColumns), std::runtime_error);
  CsvTable empty_field = t;
  empty_field.rows[0][2] = "";
  CHECK_THROWS_AS(validate_table(empty_field, kEpisodeColumns), std::runtime_error);
  CHECK_THROWS_WITH_AS(t.column("nope"), doctest::Contains("nope"), std::runtime_error);

  const auto dir = fixtures::temp_dir("csv_bad");
  { std::ofstream(dir / "empty.csv"); }
  CHECK_THROWS(read_csv(dir / "empty.csv"));
  CHECK_THROWS(read_csv(dir / "missing.csv"));
}

TEST_CASE("plot kinds") {
  for (PlotKind k : kAllPlotKinds) {
    CHECK(parse_plot_kind(to_string(k)) == k);
    CHECK_FALSE(required_columns(k).empty());
  }
  CHECK_FALSE(parse_plot_kind("Histogram").has_value());
}

TEST_CASE("svg rendering") {
  const CsvTable avg = block_average_table(fake_episodes(30000), 100);
  REQUIRE(avg.rows.size() == 300);
  const std::string svg = render_svg(PlotKind::RewardPerEpisodeAvg100, avg);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<polyline") == 1);
  CHECK(polyline_points(svg) == 300);
  CHECK(render_svg(PlotKind::RewardPerEpisodeAvg100, avg) == svg);

  const CsvTable gens = generations_table(fake_generations(20));
  const std::string both = render_svg(PlotKind::BestMeanFitness, gens);
  CHECK(count(both, "<polyline") == 2);
  CHECK(count(both, "data-label=\"best\"") == 1);
  CHECK(count(both, "data-label=\"mean\"") == 1);

  const CsvTable sp = species_table(fake_generations(6));
  const std::string per_species = render_svg(PlotKind::SpeciesFitness, sp);
  CHECK(count(per_species, "<polyline") == 3);  // species 0, 1 and 3

  CHECK_THROWS_WITH_AS(render_svg(PlotKind::BestFitness, avg), doctest::Contains("generation"),
                       std::runtime_error);
  CsvTable header_only = gens;
  header_only.rows.clear();
  CHECK_THROWS_AS(render_svg(PlotKind::BestFitness, header_only), std::runtime_error);

  const auto dir = fixtures::temp_dir("plot");
  write_csv(dir / "g.csv", gens, kGenerationColumns);
  render_plot({PlotKind::MeanFitness, dir / "g.csv", dir / "a.svg"});
  render_plot({PlotKind::MeanFitness, dir / "g.csv", dir / "b.svg"});
  CHECK(slurp(dir / "a.svg") == slurp(dir / "b.svg"));
  CHECK(slurp(dir / "a.svg") == render_svg(PlotKind::MeanFitness, gens));
}

namespace {

void write_summary(const fs::path& dir, const ExperimentSummary& s) {
  fs::create_directories(dir);
  write_text(dir / "summary.json", summary_to_json(s).dump(2));
}

ExperimentSummary q_summary(const std::string& map, std::vector<std::uint64_t> seeds) {
  ExperimentSummary s;
  s.algorithm = "Q";
  s.map = map;
  for (auto seed : seeds) {
    QSeedSummary q;
    q.seed = seed;
    q.train_episodes = 100;
    q.eval_episodes = 10;
    q.eval_mean_reward = -500.0 + static_cast<double>(seed);
    q.lap_completion_rate = 0.1 * static_cast<double>(seed);
    s.q.push_back(q);
  }
  return s;
}

ExperimentSummary neat_summary(const std::string& map, std::vector<std::uint64_t> seeds) {
  ExperimentSummary s;
  s.algorithm = "NEAT";
  s.map = map;
  for (auto seed : seeds) {
    NeatSeedSummary n;
    n.seed = seed;
    n.generations = 5;
    n.population = 10;
    n.best_fitness = 0.25 * static_cast<double>(seed);
    n.completes_lap = seed % 2 == 1;
    s.neat.push_back(n);
  }
  return s;
}

}  // namespace

TEST_CASE("summary json round-trips") {
  const ExperimentSummary q = q_summary("map1", {1, 2});
  const ExperimentSummary back = summary_from_json(summary_to_json(q));
  CHECK(back.algorithm == "Q");
  REQUIRE(back.q.size() == 2);
  CHECK(back.q[1].eval_mean_reward == q.q[1].eval_mean_reward);
  CHECK(q.lap_completion_rate() == doctest::Approx(0.15));
  CHECK(neat_summary("m", {1, 2, 3}).lap_completion_rate() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("compare builds one row per map, algorithm and seed") {
  const auto dir = fixtures::temp_dir("compare");
  write_summary(dir / "q1", q_summary("map1", {1, 2}));
  write_summary(dir / "q3", q_summary("map3", {1, 2}));
  write_summary(dir / "n1", neat_summary("map1", {1, 2, 3}));
  write_summary(dir / "n3", neat_summary("map3", {1}));

  const Report r = compare({dir / "q1", dir / "q3"}, {dir / "n1", dir / "n3"}, dir / "out");
  CHECK(r.table.header == kReportColumns);
  CHECK(r.table.rows.size() == 2 + 2 + 3 + 1);
  std::set<std::tuple<std::string, std::string, std::string>> keys;
  for (const auto& row : r.table.rows) {
    CHECK(keys.emplace(row[0], row[1], row[2]).second);
  }
  CHECK(read_csv(dir / "out" / "report.csv") == r.table);
  CHECK(fs::exists(dir / "out" / "report.txt"));
  CHECK(r.text.find("map1") != std::string::npos);
  CHECK(r.text.find("map3") != std::string::npos);

  const Report again = build_report({dir / "q1", dir / "q3"}, {dir / "n1", dir / "n3"});
  CHECK(again.table == r.table);
  CHECK(again.text == r.text);

  // No NEAT summary for map3.
  CHECK_THROWS_AS(build_report({dir / "q1", dir / "q3"}, {dir / "n1"}), std::runtime_error);
  CHECK_THROWS_AS(build_report({dir / "q1"}, {dir / "n1", dir / "missing"}), std::exception);
  // Algorithm swapped.
  CHECK_THROWS_AS(build_report({dir / "n1"}, {dir / "q1"}), std::runtime_error);
}
