#pragma once

#include <span>
#include <vector>

#include "epifair/network.hpp"

namespace epifair {

enum class ScenarioKind { baseline, targeted_boost, random_boost };

const char* to_string(ScenarioKind kind) noexcept;

/// One intervention policy: who gets boosted, by how much, how often.
struct Scenario {
  ScenarioKind kind = ScenarioKind::baseline;
  std::vector<std::size_t> targets;  // empty for baseline
  double gamma = 0.0;
};

struct Schedule {
  int horizon = 0;
  std::vector<int> times;  // multiples of floor(T / n_intervals), within [1,T]

  bool contains(int t) const;
};

/// Intervention times are the multiples of floor(T / n_intervals) up to T.
/// `include_start` additionally schedules an intervention at t = 0.
Schedule build_schedule(int horizon, int n_intervals = 10,
                        bool include_start = false);

/// Scales column j by (1 + gamma) for every target j, then row-normalizes.
InfluenceMatrix apply_boost(const InfluenceMatrix& w,
                            std::span<const std::size_t> targets,
                            double gamma);

/// Uniformly random subset of floor(N/2) agents, drawn once per run.
std::vector<std::size_t> select_random_targets(const GroupAssignment& group,
                                               Rng& rng);

/// All indices labelled group A.
std::vector<std::size_t> group_a_targets(const GroupAssignment& group);

Scenario make_scenario(ScenarioKind kind, const GroupAssignment& group,
                       double gamma, Rng& rng);

}  // namespace epifair
