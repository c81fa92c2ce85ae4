#include "epifair/audit.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace epifair {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

std::vector<std::string> group_strings(const GroupAssignment& group) {
  std::vector<std::string> g;
  g.reserve(group.size());
  for (Group label : group.labels) g.emplace_back(to_string(label));
  return g;
}

IndexPanel record_panel(const std::vector<double>& values,
                        const std::vector<std::string>& groups,
                        const ScenarioConfig& cfg) {
  Distribution d;
  d.values = values;
  d.groups = groups;
  return compute_panel(d, {cfg.ge_alpha}, {cfg.atkinson_epsilon}, cfg.n_bins);
}

ScenarioKind concrete_kind(ScenarioSelection sel) {
  switch (sel) {
    case ScenarioSelection::baseline: return ScenarioKind::baseline;
    case ScenarioSelection::targeted_boost: return ScenarioKind::targeted_boost;
    case ScenarioSelection::random_boost: return ScenarioKind::random_boost;
    case ScenarioSelection::all: break;
  }
  throw Error(errc::invalid_value,
              "run_scenario needs a concrete scenario, not 'all'");
}

// Quartile via linear interpolation on the sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return kNaN;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::string series_key(const PanelRow& row) {
  return row.param.empty() ? row.index_name
                           : row.index_name + ":" + row.param;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

const char* to_string(Stance s) noexcept {
  return s == Stance::resource ? "resource" : "capability";
}

RunResult run_scenario(const ScenarioConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const ScenarioKind kind = concrete_kind(cfg.scenario);

  Rng rng(seed);
  const GroupAssignment group = split_half(cfg.n_agents);
  const std::vector<std::string> groups = group_strings(group);
  const AdjacencyMatrix adj =
      generate_sbm(group, cfg.p_intra, cfg.p_inter, rng);
  InfluenceMatrix w = init_influence(adj, cfg.weight_low, cfg.weight_high, rng);
  const OpinionState x0 =
      sample_initial_opinions(group, cfg.beta_a, cfg.beta_b, rng);
  const Stubbornness lambda =
      sample_stubbornness(cfg.n_agents, cfg.lambda_low, cfg.lambda_high, rng);
  const Scenario scenario = make_scenario(kind, group, cfg.gamma, rng);
  const Schedule schedule =
      build_schedule(cfg.horizon, cfg.n_intervals, cfg.boost_at_start);

  RunResult result;
  result.resource = {kind, Stance::resource, seed, {}};
  result.capability = {kind, Stance::capability, seed, {}};
  result.resource.panels.reserve(cfg.horizon + 1);
  result.capability.panels.reserve(cfg.horizon + 1);

  OpinionState x = x0;
  for (int t = 0; t <= cfg.horizon; ++t) {
    const bool boost_now =
        kind != ScenarioKind::baseline && schedule.contains(t);
    if (boost_now && cfg.record_after_boost)
      w = apply_boost(w, scenario.targets, scenario.gamma);
    result.resource.panels.push_back(
        record_panel(incoming_attention(w).values, groups, cfg));
    result.capability.panels.push_back(record_panel(x.x, groups, cfg));
    if (boost_now && !cfg.record_after_boost)
      w = apply_boost(w, scenario.targets, scenario.gamma);
    if (t < cfg.horizon) x = fj_step(x, x0, lambda, w);
  }
  return result;
}

std::vector<PanelRow> panel_rows(const IndexPanel& panel) {
  std::vector<PanelRow> rows;
  rows.push_back({"jain", "", panel.jain});
  rows.push_back({"gini", "", panel.gini});
  rows.push_back({"hoover", "", panel.hoover});
  for (const auto& [alpha, entry] : panel.ge)
    rows.push_back({"ge", format_double(alpha), entry});
  for (const auto& [eps, entry] : panel.atkinson)
    rows.push_back({"atkinson", format_double(eps), entry});
  if (panel.dissimilarity)
    rows.push_back({"dissimilarity", "", *panel.dissimilarity});
  rows.push_back({"palma", "", panel.palma});
  rows.push_back({"s80_s20", "", panel.s80_s20});
  return rows;
}

SeedAggregate aggregate_seeds(const std::vector<Trajectory>& trajectories) {
  if (trajectories.empty())
    throw Error(errc::invalid_value, "no trajectories to aggregate");
  const auto& first = trajectories.front();
  for (const auto& t : trajectories) {
    if (t.scenario != first.scenario || t.stance != first.stance ||
        t.panels.size() != first.panels.size())
      throw Error(errc::heterogeneous_input,
                  "trajectories differ in scenario, stance, or length");
  }
  SeedAggregate agg;
  agg.scenario = first.scenario;
  agg.stance = first.stance;
  agg.n_seeds = trajectories.size();
  agg.horizon = static_cast<int>(first.panels.size()) - 1;

  const std::size_t steps = first.panels.size();
  for (const auto& row : panel_rows(first.panels.front())) {
    auto& series = agg.series[series_key(row)];
    series.median.assign(steps, kNaN);
    series.q1.assign(steps, kNaN);
    series.q3.assign(steps, kNaN);
    series.count.assign(steps, 0);
  }
  for (std::size_t t = 0; t < steps; ++t) {
    std::map<std::string, std::vector<double>> samples;
    for (const auto& traj : trajectories)
      for (const auto& row : panel_rows(traj.panels[t]))
        if (row.entry.ok()) samples[series_key(row)].push_back(*row.entry.value);
    for (auto& [key, values] : samples) {
      std::sort(values.begin(), values.end());
      auto& series = agg.series[key];
      if (series.median.size() != steps) {
        series.median.assign(steps, kNaN);
        series.q1.assign(steps, kNaN);
        series.q3.assign(steps, kNaN);
        series.count.assign(steps, 0);
      }
      series.median[t] = quantile_sorted(values, 0.5);
      series.q1[t] = quantile_sorted(values, 0.25);
      series.q3[t] = quantile_sorted(values, 0.75);
      series.count[t] = static_cast<int>(values.size());
    }
  }
  return agg;
}

void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out) {
  out << "scenario,stance,seed,t,index_name,param,value,error_flag\n";
  out << std::setprecision(17);
  for (std::size_t t = 0; t < trajectory.panels.size(); ++t) {
    for (const auto& row : panel_rows(trajectory.panels[t])) {
      out << to_string(trajectory.scenario) << ','
          << to_string(trajectory.stance) << ',' << trajectory.seed << ','
          << t << ',' << row.index_name << ',' << row.param << ',';
      if (row.entry.ok()) out << *row.entry.value;
      out << ',' << row.entry.error << "\n";
    }
  }
}

std::vector<Trajectory> read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      line != "scenario,stance,seed,t,index_name,param,value,error_flag")
    throw Error(errc::parse_error, "bad trajectory CSV header");

  std::vector<Trajectory> out;
  auto find_trajectory = [&](ScenarioKind kind, Stance stance,
                             std::uint64_t seed) -> Trajectory& {
    for (auto& t : out)
      if (t.scenario == kind && t.stance == stance && t.seed == seed) return t;
    out.push_back({kind, stance, seed, {}});
    return out.back();
  };

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() < 7)
      throw Error(errc::parse_error, "short trajectory CSV row");
    ScenarioKind kind;
    if (cells[0] == "baseline") kind = ScenarioKind::baseline;
    else if (cells[0] == "targeted_boost") kind = ScenarioKind::targeted_boost;
    else if (cells[0] == "random_boost") kind = ScenarioKind::random_boost;
    else throw Error(errc::parse_error, "unknown scenario " + cells[0]);
    Stance stance;
    if (cells[1] == "resource") stance = Stance::resource;
    else if (cells[1] == "capability") stance = Stance::capability;
    else throw Error(errc::parse_error, "unknown stance " + cells[1]);

    auto& traj = find_trajectory(kind, stance, std::stoull(cells[2]));
    const auto t = static_cast<std::size_t>(std::stoull(cells[3]));
    if (traj.panels.size() <= t) traj.panels.resize(t + 1);
    IndexPanel& panel = traj.panels[t];

    PanelEntry entry;
    if (!cells[6].empty()) entry.value = std::stod(cells[6]);
    if (cells.size() >= 8) entry.error = cells[7];
    const std::string& name = cells[4];
    if (name == "jain") panel.jain = entry;
    else if (name == "gini") panel.gini = entry;
    else if (name == "hoover") panel.hoover = entry;
    else if (name == "ge") panel.ge[std::stod(cells[5])] = entry;
    else if (name == "atkinson") panel.atkinson[std::stod(cells[5])] = entry;
    else if (name == "dissimilarity") panel.dissimilarity = entry;
    else if (name == "palma") panel.palma = entry;
    else if (name == "s80_s20") panel.s80_s20 = entry;
    else throw Error(errc::parse_error, "unknown index " + name);
  }
  return out;
}

}  // namespace epifair
