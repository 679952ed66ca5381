#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <type_traits>
#include <vector>

#include "autodrive/qlearn/config.hpp"
#include "autodrive/qlearn/qtable.hpp"
#include "autodrive/sim/env.hpp"
#include "autodrive/sim/radar.hpp"

namespace autodrive::qlearn {

using Rng = std::mt19937_64;

enum class Terminal { Crashed, Truncated };
std::string_view to_string(Terminal t);

struct EpisodeRecord {
  int episode = 0;
  double total_reward = 0.0;
  int steps = 0;
  double distance = 0.0;
  int checkpoints_hit = 0;
  int laps = 0;
  double epsilon = 0.0;
  double lr = 0.0;
  Terminal terminal = Terminal::Truncated;
  bool operator==(const EpisodeRecord&) const = default;
};

// Bucket i = floor(d_i / r_max * buckets), clamped to buckets - 1. Throws
// std::invalid_argument for negative or non-finite distances.
StateIndex discretize(const sim::RadarReading& radar, double r_max, int buckets);

// Epsilon-greedy over the table row; greedy ties go to the lowest index.
// Always consumes one uniform draw so the stream does not depend on epsilon.
int select_action(const QTable& q, const StateIndex& s, double epsilon, Rng& rng);

int greedy_action(const QTable& q, const StateIndex& s);

// q[s,a] += alpha * (r + gamma * max_a' q[s',a'] - q[s,a]); the bootstrap is
// dropped on terminal transitions. Throws std::invalid_argument when r is not
// finite.
void update_q(QTable& q, const StateIndex& s, int a, double r, const StateIndex& s_next,
              double alpha, double gamma, bool terminal);

inline constexpr double kCheckpointReward = 10.0;
inline constexpr double kFinishBonus = 50.0;
inline constexpr double kCrashPenalty = -1000.0;
inline constexpr double kCrashDistanceDivisor = 10.0;

double step_reward(const sim::StepEvents& events, const sim::CarState& car);

// max(value * factor, floor)
double decay(double value, double factor, double floor);

// One environment transition as the learner sees it.
struct QTransition {
  StateIndex next{};
  double reward = 0.0;
  bool terminal = false;   // absorbing; no bootstrap
  bool truncated = false;  // episode cut off; bootstraps normally
};

// Anything episodic with discrete states fits the training loop: the driving
// adapter below and hand-built MDP fixtures alike.
template <class E>
concept QEnvironment = requires(E& env, int action, EpisodeRecord& rec) {
  { env.reset() } -> std::same_as<StateIndex>;
  { env.step(action) } -> std::same_as<QTransition>;
  { env.action_count() } -> std::convertible_to<int>;
  env.annotate(rec);
};

struct EpisodeOptions {
  double epsilon = 0.0;
  double lr = 0.0;
  double gamma = 0.99;
};

using StepObserver = std::function<void(int action, const QTransition&)>;

// Runs one episode. A mutable table is updated after every transition; a
// const table is only read.
template <QEnvironment E, class Table>
  requires std::same_as<std::remove_const_t<Table>, QTable>
EpisodeRecord run_episode(Table& q, E& env, const EpisodeOptions& opt, Rng& rng,
                          const StepObserver& observe = {}) {
  EpisodeRecord rec;
  rec.epsilon = opt.epsilon;
  rec.lr = std::is_const_v<Table> ? 0.0 : opt.lr;
  StateIndex s = env.reset();
  for (;;) {
    const int a = select_action(q, s, opt.epsilon, rng);
    const QTransition tr = env.step(a);
    if constexpr (!std::is_const_v<Table>) {
      update_q(q, s, a, tr.reward, tr.next, opt.lr, opt.gamma, tr.terminal);
    }
    rec.total_reward += tr.reward;
    rec.steps += 1;
    if (observe) observe(a, tr);
    s = tr.next;
    if (tr.terminal || tr.truncated) {
      rec.terminal = tr.terminal ? Terminal::Crashed : Terminal::Truncated;
      break;
    }
  }
  env.annotate(rec);
  return rec;
}

struct TrainResult {
  QTable table;
  std::vector<EpisodeRecord> records;
};

// Per-episode callback, e.g. for progress output.
using EpisodeCallback = std::function<void(const EpisodeRecord&)>;

template <QEnvironment E>
TrainResult train_on(E& env, const QConfig& cfg, const EpisodeCallback& on_episode = {}) {
  cfg.validate();
  TrainResult out{QTable(cfg.buckets, env.action_count(), cfg.seed), {}};
  out.records.reserve(static_cast<std::size_t>(cfg.episodes_train));
  Rng rng(cfg.seed);
  double epsilon = cfg.epsilon0;
  double lr = cfg.lr0;
  for (int ep = 0; ep < cfg.episodes_train; ++ep) {
    EpisodeRecord rec = run_episode(out.table, env, EpisodeOptions{epsilon, lr, cfg.gamma}, rng);
    rec.episode = ep;
    if (on_episode) on_episode(rec);
    out.records.push_back(rec);
    epsilon = decay(epsilon, cfg.epsilon_decay, cfg.epsilon_min);
    lr = decay(lr, cfg.lr_decay, cfg.lr_min);
  }
  return out;
}

// Evaluation draws from a stream distinct from training's.
inline Rng evaluation_rng(std::uint64_t seed) { return Rng(seed ^ 0x9e3779b97f4a7c15ULL); }

template <QEnvironment E>
std::vector<EpisodeRecord> evaluate_on(const QTable& q, E& env, const QConfig& cfg) {
  cfg.validate();
  std::vector<EpisodeRecord> out;
  out.reserve(static_cast<std::size_t>(cfg.episodes_eval));
  Rng rng = evaluation_rng(cfg.seed);
  for (int ep = 0; ep < cfg.episodes_eval; ++ep) {
    EpisodeRecord rec = run_episode(q, env, EpisodeOptions{cfg.eval_epsilon, 0.0, cfg.gamma}, rng);
    rec.episode = ep;
    out.push_back(rec);
  }
  return out;
}

// Adapts the driving simulator: radar readings become bucketed states and
// step events become rewards.
class DrivingQEnv {
 public:
  DrivingQEnv(const sim::TrackMap& track, sim::EnvConfig env_cfg, int buckets, ActionSet set);

  StateIndex reset();
  QTransition step(int action);
  int action_count() const { return static_cast<int>(actions_.size()); }
  void annotate(EpisodeRecord& rec) const;

  sim::Action action_at(int index) const { return actions_[static_cast<std::size_t>(index)]; }
  const sim::CarState& car() const { return car_; }
  const sim::StepResult& last_step() const { return last_; }
  const sim::EnvConfig& env_config() const { return cfg_; }

 private:
  const sim::TrackMap* track_;
  sim::EnvConfig cfg_;
  int buckets_;
  std::span<const sim::Action> actions_;
  sim::CarState car_;
  sim::StepResult last_;
  int checkpoints_hit_ = 0;
};

// The QConfig's max_steps replaces env_cfg.max_steps.
TrainResult train(const sim::TrackMap& track, const QConfig& cfg, const sim::EnvConfig& env_cfg,
                  const EpisodeCallback& on_episode = {});

// Fixed eval_epsilon (0.01 by default), no table updates.
std::vector<EpisodeRecord> evaluate(const QTable& q, const sim::TrackMap& track,
                                    const QConfig& cfg, const sim::EnvConfig& env_cfg);

}  // namespace autodrive::qlearn
