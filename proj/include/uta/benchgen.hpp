#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uta/model.hpp"

namespace uta {

struct TaskSpec {
  std::int64_t C = 0;  // computation time
  std::int64_t D = 0;  // deadline
  std::optional<std::int64_t> P;  // period
};

enum class ReleaseKind : std::uint8_t { Flower, WorstCase, Periodic, SporadicPeriodic, MinePump };

struct ReleasePattern {
  ReleaseKind kind = ReleaseKind::Flower;
  std::int64_t N = 0;  // SporadicPeriodic burst length
};

std::vector<TaskSpec> sporadic_periodic_tasks();
std::vector<TaskSpec> mine_pump_tasks();

// SporadicPeriodic and MinePump ignore `tasks` and use their preset.
// Throws std::invalid_argument on C > D, D > P, or missing periods.
Network gen_edf(const std::vector<TaskSpec>& tasks, const ReleasePattern& pat);

struct CounterTransition {
  int from = 0;
  std::int64_t p = 0;
  int to = 0;
};

struct CounterAutomaton {
  std::vector<std::string> states;
  int init = 0;
  int target = 0;
  std::vector<CounterTransition> trans;
  std::int64_t b = 0;
};

// "l0 +1 lt, lt -1 l0"; states are created on first mention. The initial
// state is `init` (default l0) and the target `target` (default lt).
CounterAutomaton parse_counter_spec(const std::string& spec, std::int64_t b, const std::string& init = "l0",
                                    const std::string& target = "lt");
CounterAutomaton random_counter(std::uint64_t seed, int max_states, std::int64_t max_b);

Network gen_counter_reduction(const CounterAutomaton& b);
bool counter_reach_oracle(const CounterAutomaton& b);

Network gen_fig1();
Network gen_fig1_unguarded();

enum class Fragment : std::uint8_t { SubtractionBounded, ClockBounded, ResetOnly, General };

struct RandomProfile {
  int n_locs = 4;
  int n_clocks = 2;
  Fragment fragment = Fragment::General;
  std::int64_t max_const = 5;
  std::uint64_t seed = 0;
};

Network gen_random(const RandomProfile& prof);

}  // namespace uta
