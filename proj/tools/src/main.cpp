#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "epifair/audit.hpp"
#include "epifair/config.hpp"
#include "epifair/deficit.hpp"
#include "svg_report.hpp"
#include "value_csv.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw epifair::Error(epifair::errc::io_error,
                                "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw epifair::Error(epifair::errc::io_error,
                                 "cannot write " + path.string());
  out << content;
}

std::vector<epifair::ScenarioKind> expand_selection(
    epifair::ScenarioSelection sel) {
  using epifair::ScenarioKind;
  using epifair::ScenarioSelection;
  switch (sel) {
    case ScenarioSelection::baseline: return {ScenarioKind::baseline};
    case ScenarioSelection::targeted_boost:
      return {ScenarioKind::targeted_boost};
    case ScenarioSelection::random_boost: return {ScenarioKind::random_boost};
    case ScenarioSelection::all:
      return {ScenarioKind::baseline, ScenarioKind::targeted_boost,
              ScenarioKind::random_boost};
  }
  return {};
}

epifair::ScenarioSelection to_selection(epifair::ScenarioKind kind) {
  using epifair::ScenarioKind;
  using epifair::ScenarioSelection;
  switch (kind) {
    case ScenarioKind::baseline: return ScenarioSelection::baseline;
    case ScenarioKind::targeted_boost: return ScenarioSelection::targeted_boost;
    case ScenarioKind::random_boost: return ScenarioSelection::random_boost;
  }
  return ScenarioSelection::baseline;
}

int run_indices(const std::string& input, const std::string& output,
                std::vector<double> ge_alphas, std::vector<double> epsilons,
                int n_bins) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file) {
      std::cerr << "error: cannot open " << input << "\n";
      return kExitData;
    }
    in = &file;
  }
  const epifair::Distribution d = epifair::cli::read_value_csv(*in);
  if (ge_alphas.empty()) ge_alphas = {2.0};
  if (epsilons.empty()) epsilons = {2.0};
  std::optional<int> bins;
  if (n_bins > 0) bins = n_bins;
  const auto panel = epifair::compute_panel(d, ge_alphas, epsilons, bins);

  std::ostringstream out;
  out << "index_name,param,value,error_flag\n";
  out << std::setprecision(17);
  bool any_error = false;
  for (const auto& row : epifair::panel_rows(panel)) {
    out << row.index_name << ',' << row.param << ',';
    if (row.entry.ok()) out << *row.entry.value;
    else any_error = true;
    out << ',' << row.entry.error << "\n";
  }
  if (output.empty() || output == "-") std::cout << out.str();
  else write_file(output, out.str());
  return any_error ? kExitData : kExitOk;
}

int run_simulate(const std::string& config_path, const std::string& out_dir,
                 const std::string& scenario_override,
                 std::int64_t seed_override, int n_seeds_override,
                 unsigned jobs) {
  epifair::ScenarioConfig cfg;
  if (!config_path.empty()) cfg = epifair::parse_config(read_file(config_path));
  if (!scenario_override.empty()) {
    const auto sel = epifair::scenario_selection_from_string(scenario_override);
    if (!sel) throw epifair::Error(epifair::errc::invalid_value, "scenario");
    cfg.scenario = *sel;
  }
  if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
  if (n_seeds_override > 0) cfg.n_seeds = n_seeds_override;
  cfg.validate();

  fs::create_directories(out_dir);
  const auto scenarios = expand_selection(cfg.scenario);

  struct Job {
    epifair::ScenarioKind kind;
    std::uint64_t seed;
  };
  std::vector<Job> job_list;
  for (auto kind : scenarios)
    for (int k = 0; k < cfg.n_seeds; ++k)
      job_list.push_back({kind, cfg.seed + static_cast<std::uint64_t>(k)});

  std::vector<std::string> files(job_list.size() * 2);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::string first_error;

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < job_list.size();
         i = next.fetch_add(1)) {
      try {
        epifair::ScenarioConfig run_cfg = cfg;
        run_cfg.scenario = to_selection(job_list[i].kind);
        const auto result = epifair::run_scenario(run_cfg, job_list[i].seed);
        for (const auto* traj : {&result.resource, &result.capability}) {
          std::ostringstream name;
          name << epifair::to_string(traj->scenario) << "_seed" << traj->seed
               << "_" << epifair::to_string(traj->stance) << ".csv";
          std::ostringstream body;
          epifair::write_trajectory_csv(*traj, body);
          write_file(fs::path(out_dir) / name.str(), body.str());
          files[i * 2 + (traj->stance == epifair::Stance::resource ? 0 : 1)] =
              name.str();
        }
      } catch (const std::exception& e) {
        std::scoped_lock lock(error_mutex);
        if (first_error.empty()) first_error = e.what();
      }
    }
  };
  const unsigned n_workers = std::min<std::size_t>(
      jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency()),
      job_list.size());
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (!first_error.empty()) {
    std::cerr << "error: " << first_error << "\n";
    return kExitData;
  }

  json manifest;
  manifest["config"] = json::object();
  {
    // resolved config, one entry per key
    std::istringstream cfg_text(epifair::serialize_config(cfg));
    std::string line;
    while (std::getline(cfg_text, line)) {
      const auto eq = line.find(" = ");
      manifest["config"][line.substr(0, eq)] = line.substr(eq + 3);
    }
  }
  manifest["scenarios"] = json::array();
  for (auto kind : scenarios) manifest["scenarios"].push_back(epifair::to_string(kind));
  manifest["seeds"] = json::array();
  for (int k = 0; k < cfg.n_seeds; ++k)
    manifest["seeds"].push_back(cfg.seed + static_cast<std::uint64_t>(k));
  manifest["files"] = files;
  write_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
  std::cout << "wrote " << files.size() << " trajectory files to " << out_dir
            << "\n";
  return kExitOk;
}

int run_report(const std::vector<std::string>& inputs,
               const std::string& out_dir, const std::string& index_filter) {
  if (inputs.empty()) {
    std::cerr << "error: no trajectory CSVs given\n";
    return kExitUsage;
  }
  std::vector<epifair::Trajectory> all;
  for (const auto& path : inputs) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open " << path << "\n";
      return kExitData;
    }
    auto read = epifair::read_trajectory_csv(in);
    all.insert(all.end(), std::make_move_iterator(read.begin()),
               std::make_move_iterator(read.end()));
  }

  fs::create_directories(out_dir);
  int charts = 0;
  for (auto stance : {epifair::Stance::resource, epifair::Stance::capability}) {
    // aggregate per scenario
    std::vector<epifair::SeedAggregate> aggregates;
    for (auto kind :
         {epifair::ScenarioKind::baseline, epifair::ScenarioKind::targeted_boost,
          epifair::ScenarioKind::random_boost}) {
      std::vector<epifair::Trajectory> bucket;
      for (const auto& t : all)
        if (t.stance == stance && t.scenario == kind) bucket.push_back(t);
      if (!bucket.empty()) aggregates.push_back(epifair::aggregate_seeds(bucket));
    }
    if (aggregates.empty()) continue;
    std::set<std::string> keys;
    for (const auto& agg : aggregates)
      for (const auto& [key, _] : agg.series) keys.insert(key);
    for (const auto& key : keys) {
      if (!index_filter.empty() &&
          key.substr(0, key.find(':')) != index_filter)
        continue;
      std::vector<epifair::cli::ChartSeries> series;
      for (const auto& agg : aggregates) {
        const auto it = agg.series.find(key);
        if (it == agg.series.end()) continue;
        epifair::cli::ChartSeries s;
        s.label = epifair::to_string(agg.scenario);
        s.median = it->second.median;
        s.q1 = it->second.q1;
        s.q3 = it->second.q3;
        s.draw_band = agg.n_seeds > 1;
        series.push_back(std::move(s));
      }
      std::string safe_key = key;
      for (auto& c : safe_key)
        if (c == ':') c = '_';
      const std::string name = std::string(epifair::to_string(stance)) + "_" +
                               safe_key + ".svg";
      std::ostringstream body;
      epifair::cli::write_svg_chart(
          body, std::string(epifair::to_string(stance)) + " / " + key, series);
      write_file(fs::path(out_dir) / name, body.str());
      ++charts;
    }
  }
  if (charts == 0) {
    std::cerr << "error: nothing to plot\n";
    return kExitData;
  }
  std::cout << "wrote " << charts << " charts to " << out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fairness-index engine and epistemic-auditing toolkit"};
  app.require_subcommand(1);

  // indices
  auto* indices_cmd =
      app.add_subcommand("indices", "Compute an index panel from a value CSV");
  std::string indices_input;
  std::string indices_output;
  std::vector<double> ge_alphas;
  std::vector<double> epsilons;
  int n_bins = 0;
  indices_cmd->add_option("-i,--input", indices_input, "CSV with a value column ('-' for stdin)")
      ->required();
  indices_cmd->add_option("-o,--output", indices_output, "Output CSV (default stdout)");
  indices_cmd->add_option("--ge-alpha", ge_alphas, "Generalized entropy alpha (repeatable)");
  indices_cmd->add_option("--epsilon", epsilons, "Atkinson epsilon (repeatable)");
  indices_cmd->add_option("--n-bins", n_bins, "Quantile bins for dissimilarity (needs group column)");

  // simulate
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Run the opinion-dynamics audit simulation");
  std::string config_path;
  std::string sim_out = "out";
  std::string scenario_override;
  std::int64_t seed_override = -1;
  int n_seeds_override = 0;
  unsigned jobs = 0;
  simulate_cmd->add_option("-c,--config", config_path, "Config file (key = value lines)");
  simulate_cmd->add_option("-o,--out", sim_out, "Output directory");
  simulate_cmd->add_option("--scenario", scenario_override,
                           "baseline | targeted_boost | random_boost | all");
  simulate_cmd->add_option("--seed", seed_override, "First seed");
  simulate_cmd->add_option("--n-seeds", n_seeds_override, "Number of seeds");
  simulate_cmd->add_option("-j,--jobs", jobs, "Worker threads (default: hardware)");

  // report
  auto* report_cmd =
      app.add_subcommand("report", "Render SVG charts from trajectory CSVs");
  std::vector<std::string> report_inputs;
  std::string report_out = "report";
  std::string index_filter;
  report_cmd->add_option("inputs", report_inputs, "Trajectory CSV files");
  report_cmd->add_option("-o,--out", report_out, "Output directory");
  report_cmd->add_option("--index", index_filter, "Only plot this index");

  // catalog
  auto* catalog_cmd =
      app.add_subcommand("catalog", "Print the epistemic-injustice catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*indices_cmd)
      return run_indices(indices_input, indices_output, ge_alphas, epsilons,
                         n_bins);
    if (*simulate_cmd)
      return run_simulate(config_path, sim_out, scenario_override,
                          seed_override, n_seeds_override, jobs);
    if (*report_cmd) return run_report(report_inputs, report_out, index_filter);
    if (*catalog_cmd) {
      std::cout << epifair::format_catalog();
      return kExitOk;
    }
  } catch (const epifair::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
