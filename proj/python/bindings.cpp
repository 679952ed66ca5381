#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "autodrive/harness/cli.hpp"
#include "autodrive/harness/csv.hpp"
#include "autodrive/neat/evaluate.hpp"
#include "autodrive/neat/genome_io.hpp"
#include "autodrive/qlearn/agent.hpp"
#include "autodrive/sim/env.hpp"
#include "autodrive/sim/mapgen.hpp"
#include "autodrive/sim/track_io.hpp"

#include <sstream>

namespace py = pybind11;
using namespace autodrive;

namespace {

sim::Archetype archetype(const std::string& name) {
  auto a = sim::parse_archetype(name);
  if (!a) throw py::value_error("unknown archetype '" + name + "'");
  return *a;
}

py::dict record_dict(const qlearn::EpisodeRecord& r) {
  py::dict d;
  d["episode"] = r.episode;
  d["total_reward"] = r.total_reward;
  d["steps"] = r.steps;
  d["distance"] = r.distance;
  d["checkpoints_hit"] = r.checkpoints_hit;
  d["laps"] = r.laps;
  d["terminal"] = std::string(qlearn::to_string(r.terminal));
  return d;
}

}  // namespace

PYBIND11_MODULE(_autodrive, m) {
  m.doc() = "Headless driving simulator with tabular Q-learning and NEAT";

  py::enum_<sim::Action>(m, "Action")
      .value("SpeedUp", sim::Action::SpeedUp)
      .value("TurnLeft", sim::Action::TurnLeft)
      .value("TurnRight", sim::Action::TurnRight)
      .value("SlowDown", sim::Action::SlowDown)
      .value("LeftSpeedUp", sim::Action::LeftSpeedUp)
      .value("RightSpeedUp", sim::Action::RightSpeedUp);

  py::class_<sim::EnvConfig>(m, "EnvConfig")
      .def(py::init<>())
      .def_readwrite("max_steps", &sim::EnvConfig::max_steps)
      .def_readwrite("radar_max", &sim::EnvConfig::radar_max)
      .def_readwrite("speed_min", &sim::EnvConfig::speed_min)
      .def_readwrite("speed_max", &sim::EnvConfig::speed_max);

  py::class_<sim::Pose>(m, "Pose")
      .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("angle"))
      .def_readwrite("x", &sim::Pose::x)
      .def_readwrite("y", &sim::Pose::y)
      .def_readwrite("angle", &sim::Pose::angle);

  py::class_<sim::CarState>(m, "CarState")
      .def(py::init<>())
      .def_readwrite("pose", &sim::CarState::pose)
      .def_readwrite("speed", &sim::CarState::speed)
      .def_readonly("distance", &sim::CarState::distance)
      .def_readonly("alive", &sim::CarState::alive)
      .def_readonly("next_checkpoint", &sim::CarState::next_checkpoint)
      .def_readonly("laps_completed", &sim::CarState::laps_completed)
      .def_readonly("steps", &sim::CarState::steps);

  py::class_<sim::TrackMap, std::shared_ptr<sim::TrackMap>>(m, "TrackMap")
      .def_readonly("name", &sim::TrackMap::name)
      .def_property_readonly("width", [](const sim::TrackMap& t) { return t.grid.width(); })
      .def_property_readonly("height", [](const sim::TrackMap& t) { return t.grid.height(); })
      .def_readonly("start", &sim::TrackMap::start)
      .def_property_readonly("checkpoint_count",
                             [](const sim::TrackMap& t) { return t.checkpoints.size(); })
      .def("drivable", [](const sim::TrackMap& t, int x, int y) { return t.grid.drivable(x, y); })
      .def("save", [](const sim::TrackMap& t, const std::string& prefix) { sim::save_track(t, prefix); });

  m.def("generate_map",
        [](const std::string& name, std::uint64_t seed) {
          const auto a = archetype(name);
          return std::make_shared<sim::TrackMap>(sim::generate_map(a, sim::default_params(a), seed));
        },
        py::arg("archetype"), py::arg("seed") = 7);
  m.def("load_map", [](const std::string& prefix) {
    return std::make_shared<sim::TrackMap>(sim::load_track(prefix));
  });

  m.def("apply_action",
        [](sim::CarState car, sim::Action a, const sim::EnvConfig& cfg, int w, int h) {
          return sim::apply_action(car, a, cfg, sim::Extent{w, h});
        },
        py::arg("car"), py::arg("action"), py::arg("config"), py::arg("width"), py::arg("height"));

  py::class_<sim::Environment>(m, "Environment")
      .def(py::init([](std::shared_ptr<sim::TrackMap> t, const sim::EnvConfig& cfg) {
             return sim::Environment(std::move(t), cfg);
           }),
           py::arg("track"), py::arg("config") = sim::EnvConfig{})
      .def("reset", [](sim::Environment& e) { return e.reset().distances; })
      .def("step",
           [](sim::Environment& e, sim::Action a) {
             const sim::StepResult r = e.step(a);
             py::dict events;
             events["checkpoint"] = r.events.crossed_checkpoint;
             events["finish"] = r.events.crossed_finish;
             events["crashed"] = r.events.crashed;
             events["truncated"] = r.events.truncated;
             return py::make_tuple(r.radar.distances, events);
           })
      .def_property_readonly("done", &sim::Environment::done)
      .def_property_readonly("car", &sim::Environment::car);

  m.def("train_q",
        [](std::shared_ptr<sim::TrackMap> t, int episodes, std::uint64_t seed, int eval_episodes) {
          qlearn::QConfig cfg;
          cfg.episodes_train = episodes;
          cfg.episodes_eval = eval_episodes;
          cfg.seed = seed;
          const sim::EnvConfig env;
          qlearn::TrainResult r;
          {
            py::gil_scoped_release nogil;
            r = qlearn::train(*t, cfg, env);
          }
          py::list train, eval;
          for (const auto& rec : r.records) train.append(record_dict(rec));
          for (const auto& rec : qlearn::evaluate(r.table, *t, cfg, env)) eval.append(record_dict(rec));
          return py::make_tuple(train, eval, r.table.fingerprint());
        },
        py::arg("track"), py::arg("episodes"), py::arg("seed") = 1, py::arg("eval_episodes") = 100);

  m.def("run_neat",
        [](std::shared_ptr<sim::TrackMap> t, int population, int generations, std::uint64_t seed) {
          neat::NeatConfig cfg;
          cfg.population = population;
          cfg.generations = generations;
          cfg.seed = seed;
          neat::RunResult r;
          {
            py::gil_scoped_release nogil;
            r = neat::run_neat(*t, cfg, sim::EnvConfig{});
          }
          py::list best;
          for (const auto& s : r.stats) best.append(s.best_fitness);
          return py::make_tuple(neat::genome_to_json(r.best).dump(), best);
        },
        py::arg("track"), py::arg("population"), py::arg("generations"), py::arg("seed") = 1);

  m.def("genome_fitness",
        [](const std::string& genome_json, std::shared_ptr<sim::TrackMap> t) {
          const neat::Genome g = neat::genome_from_json(nlohmann::ordered_json::parse(genome_json));
          return neat::driving_fitness(neat::drive_genome(g, *t, sim::EnvConfig{}, 3));
        });

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release nogil;
      code = harness::run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
