#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "epifair/config.hpp"
#include "epifair/dynamics.hpp"
#include "epifair/indices.hpp"
#include "epifair/interventions.hpp"
#include "epifair/network.hpp"

namespace epifair {

/// What quantity the indices are applied to: the incoming-attention column
/// sums (resource) or the realized opinions (capability).
enum class Stance { resource, capability };

const char* to_string(Stance s) noexcept;

/// Index panels for one measured quantity over t = 0..T.
struct Trajectory {
  ScenarioKind scenario = ScenarioKind::baseline;
  Stance stance = Stance::resource;
  std::uint64_t seed = 0;
  std::vector<IndexPanel> panels;  // panels[t], length horizon + 1
};

struct RunResult {
  Trajectory resource;
  Trajectory capability;
};

/// Executes one full simulation run: generate the SBM, initialize W0,
/// sample opinions and stubbornness, then for each step record both stance
/// panels, apply any scheduled boost, and advance the opinion update.
/// Panels are recorded before the boost scheduled at the same step unless
/// cfg.record_after_boost is set. Deterministic given (cfg, seed).
RunResult run_scenario(const ScenarioConfig& cfg, std::uint64_t seed);

/// Per-(index, t) median and quartiles across seeds.
struct AggregateSeries {
  std::vector<double> median;  // indexed by t; NaN where no seed had a value
  std::vector<double> q1;
  std::vector<double> q3;
  std::vector<int> count;      // seeds contributing at each t
};

struct SeedAggregate {
  ScenarioKind scenario = ScenarioKind::baseline;
  Stance stance = Stance::resource;
  std::size_t n_seeds = 0;
  int horizon = 0;
  // Keyed by index name, with the parameter appended for the parameterized
  // families, e.g. "gini", "ge:2", "atkinson:2".
  std::map<std::string, AggregateSeries> series;
};

/// Requires at least one trajectory, all with the same scenario, stance,
/// and length. Per-field errors are simply left out of the statistics.
SeedAggregate aggregate_seeds(const std::vector<Trajectory>& trajectories);

/// Flattens a panel into (index_name, param, entry) rows; param is empty for
/// the unparameterized indices.
struct PanelRow {
  std::string index_name;
  std::string param;
  PanelEntry entry;
};
std::vector<PanelRow> panel_rows(const IndexPanel& panel);

/// Long-format CSV with columns
/// scenario,stance,seed,t,index_name,param,value,error_flag.
void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out);

/// Reads one or more trajectories back from long-format CSV.
std::vector<Trajectory> read_trajectory_csv(std::istream& in);

}  // namespace epifair
