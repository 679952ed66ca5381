#pragma once

// Five-state deterministic chain for checking the learner against value
// iteration without the simulator.
//
//   states 0..4, actions 0 = left, 1 = right
//   right from 3 reaches the goal 4: reward 10, episode ends
//   left from 0 stays at 0: reward 1 (a small loop that competes with the goal)
//   every other move: reward 0
//   episodes start at 0 and are truncated after `horizon` steps

#include <array>
#include <cmath>

#include "autodrive/qlearn/agent.hpp"

namespace chain {

using autodrive::qlearn::EpisodeRecord;
using autodrive::qlearn::QTransition;
using autodrive::qlearn::StateIndex;

inline constexpr int kStates = 5;
inline constexpr int kActions = 2;

struct Outcome {
  int next;
  double reward;
  bool terminal;
};

inline Outcome transition(int s, int a) {
  if (a == 1) {
    if (s == 3) return {4, 10.0, true};
    return {s + 1, 0.0, false};
  }
  if (s == 0) return {0, 1.0, false};
  return {s - 1, 0.0, false};
}

inline StateIndex index_of(int s) { return StateIndex{s, 0, 0, 0, 0}; }

class ChainEnv {
 public:
  explicit ChainEnv(int horizon = 30) : horizon_(horizon) {}
  StateIndex reset() {
    s_ = 0;
    t_ = 0;
    return index_of(s_);
  }
  QTransition step(int a) {
    const Outcome o = transition(s_, a);
    s_ = o.next;
    ++t_;
    return QTransition{index_of(s_), o.reward, o.terminal, !o.terminal && t_ >= horizon_};
  }
  int action_count() const { return kActions; }
  void annotate(EpisodeRecord& rec) const { rec.distance = s_; }

 private:
  int horizon_;
  int s_ = 0;
  int t_ = 0;
};

// Q*(s, a) for the non-terminal states 0..3, by value iteration to a fixed point.
inline std::array<std::array<double, kActions>, kStates> value_iteration(double gamma) {
  std::array<std::array<double, kActions>, kStates> q{};
  for (int sweep = 0; sweep < 100000; ++sweep) {
    double change = 0.0;
    for (int s = 0; s < kStates - 1; ++s) {
      for (int a = 0; a < kActions; ++a) {
        const Outcome o = transition(s, a);
        const double v = o.terminal ? 0.0 : std::max(q[o.next][0], q[o.next][1]);
        const double nq = o.reward + gamma * v;
        change = std::max(change, std::abs(nq - q[s][a]));
        q[s][a] = nq;
      }
    }
    if (change == 0.0) break;
  }
  return q;
}

}  // namespace chain
