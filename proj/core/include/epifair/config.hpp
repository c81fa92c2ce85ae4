#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "epifair/errors.hpp"
#include "epifair/interventions.hpp"

namespace epifair {

/// Which scenarios a simulation sweep covers. `all` expands to the three
/// concrete kinds.
enum class ScenarioSelection { baseline, targeted_boost, random_boost, all };

const char* to_string(ScenarioSelection s) noexcept;
std::optional<ScenarioSelection> scenario_selection_from_string(
    const std::string& s) noexcept;

/// Full simulation parameterization. Defaults reproduce the reference
/// study's setup (N=100, SBM 0.18/0.04, Beta(1.4,5) opinions,
/// U(0.2,0.5) stubbornness, T=50, gamma=0.5, 10 intervention intervals,
/// GE alpha=2, Atkinson epsilon=2, 10 quantile bins).
struct ScenarioConfig {
  std::size_t n_agents = 100;
  double p_intra = 0.18;
  double p_inter = 0.04;
  double weight_low = 0.5;
  double weight_high = 1.5;
  double beta_a = 1.4;
  double beta_b = 5.0;
  double lambda_low = 0.2;
  double lambda_high = 0.5;
  int horizon = 50;
  double gamma = 0.5;
  int n_intervals = 10;
  ScenarioSelection scenario = ScenarioSelection::baseline;
  double ge_alpha = 2.0;
  double atkinson_epsilon = 2.0;
  int n_bins = 10;
  std::uint64_t seed = 1;
  int n_seeds = 1;
  bool boost_at_start = false;     // schedule an intervention at t = 0 too
  bool record_after_boost = false; // record panels after the boost at step t

  /// Throws InvalidValue naming the offending key.
  void validate() const;
};

/// Parses the `key = value` plain-text format (one pair per line, `#`
/// comments). Unknown keys are rejected; missing keys keep their defaults.
ScenarioConfig parse_config(const std::string& text);

/// Inverse of parse_config: emits every key, round-trip exact.
std::string serialize_config(const ScenarioConfig& cfg);

}  // namespace epifair
