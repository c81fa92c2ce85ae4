#include "epifair/interventions.hpp"

#include <algorithm>
#include <numeric>

namespace epifair {

const char* to_string(ScenarioKind kind) noexcept {
  switch (kind) {
    case ScenarioKind::baseline: return "baseline";
    case ScenarioKind::targeted_boost: return "targeted_boost";
    case ScenarioKind::random_boost: return "random_boost";
  }
  return "unknown";
}

bool Schedule::contains(int t) const {
  return std::binary_search(times.begin(), times.end(), t);
}

Schedule build_schedule(int horizon, int n_intervals, bool include_start) {
  if (n_intervals < 1)
    throw Error(errc::invalid_value, "n_intervals must be positive");
  if (horizon < n_intervals)
    throw Error(errc::horizon_too_short,
                "horizon shorter than the number of intervals");
  Schedule s;
  s.horizon = horizon;
  const int period = horizon / n_intervals;
  if (include_start) s.times.push_back(0);
  for (int t = period; t <= horizon; t += period) s.times.push_back(t);
  return s;
}

InfluenceMatrix apply_boost(const InfluenceMatrix& w,
                            std::span<const std::size_t> targets,
                            double gamma) {
  if (gamma < -1.0)
    throw Error(errc::invalid_value, "boost factor 1+gamma must be >= 0");
  for (std::size_t j : targets)
    if (j >= w.n) throw Error(errc::invalid_target, "target index out of range");
  InfluenceMatrix boosted = w;
  const double factor = 1.0 + gamma;
  for (std::size_t j : targets)
    for (std::size_t i = 0; i < w.n; ++i) boosted.at(i, j) *= factor;
  return row_normalize(boosted);
}

std::vector<std::size_t> select_random_targets(const GroupAssignment& group,
                                               Rng& rng) {
  const std::size_t n = group.size();
  if (n < 2) throw Error(errc::invalid_value, "need at least two agents");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  const std::size_t k = n / 2;
  // Partial Fisher-Yates: the first k slots end up a uniform subset.
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<std::size_t> group_a_targets(const GroupAssignment& group) {
  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < group.size(); ++i)
    if (group.labels[i] == Group::A) targets.push_back(i);
  return targets;
}

Scenario make_scenario(ScenarioKind kind, const GroupAssignment& group,
                       double gamma, Rng& rng) {
  Scenario s;
  s.kind = kind;
  s.gamma = gamma;
  switch (kind) {
    case ScenarioKind::baseline:
      break;
    case ScenarioKind::targeted_boost:
      s.targets = group_a_targets(group);
      break;
    case ScenarioKind::random_boost:
      s.targets = select_random_targets(group, rng);
      break;
  }
  return s;
}

}  // namespace epifair
