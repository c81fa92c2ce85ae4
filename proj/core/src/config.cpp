#include "epifair/config.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace epifair {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size() || !std::isfinite(v))
      throw Error(errc::parse_error, key);
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(errc::parse_error, "bad numeric value for key " + key);
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::int64_t v = std::stoll(value, &pos);
    if (pos != value.size()) throw Error(errc::parse_error, key);
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(errc::parse_error, "bad integer value for key " + key);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw Error(errc::parse_error, "bad boolean value for key " + key);
}

void check(bool ok, const char* key) {
  if (!ok) throw Error(errc::invalid_value, key);
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

}  // namespace

const char* to_string(ScenarioSelection s) noexcept {
  switch (s) {
    case ScenarioSelection::baseline: return "baseline";
    case ScenarioSelection::targeted_boost: return "targeted_boost";
    case ScenarioSelection::random_boost: return "random_boost";
    case ScenarioSelection::all: return "all";
  }
  return "unknown";
}

std::optional<ScenarioSelection> scenario_selection_from_string(
    const std::string& s) noexcept {
  if (s == "baseline") return ScenarioSelection::baseline;
  if (s == "targeted_boost") return ScenarioSelection::targeted_boost;
  if (s == "random_boost") return ScenarioSelection::random_boost;
  if (s == "all") return ScenarioSelection::all;
  return std::nullopt;
}

void ScenarioConfig::validate() const {
  check(n_agents >= 2, "n_agents");
  check(p_intra >= 0.0 && p_intra <= 1.0, "p_intra");
  check(p_inter >= 0.0 && p_inter <= 1.0 && p_inter <= p_intra, "p_inter");
  check(weight_low >= 0.0 && weight_low < weight_high, "weight_low");
  check(beta_a > 0.0, "beta_a");
  check(beta_b > 0.0, "beta_b");
  check(lambda_low > 0.0 && lambda_low < lambda_high && lambda_high < 1.0,
        "lambda_low");
  check(n_intervals >= 1, "n_intervals");
  check(horizon >= n_intervals, "horizon");
  check(gamma >= -1.0, "gamma");  // boost factor 1+gamma must stay nonnegative
  check(n_bins >= 1 && static_cast<std::size_t>(n_bins) <= n_agents, "n_bins");
  check(n_seeds >= 1, "n_seeds");
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(errc::parse_error,
                  "line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "n_agents") {
      const auto v = parse_int(key, value);
      if (v < 1) throw Error(errc::invalid_value, key);
      cfg.n_agents = static_cast<std::size_t>(v);
    } else if (key == "p_intra") {
      cfg.p_intra = parse_double(key, value);
    } else if (key == "p_inter") {
      cfg.p_inter = parse_double(key, value);
    } else if (key == "weight_low") {
      cfg.weight_low = parse_double(key, value);
    } else if (key == "weight_high") {
      cfg.weight_high = parse_double(key, value);
    } else if (key == "beta_a") {
      cfg.beta_a = parse_double(key, value);
    } else if (key == "beta_b") {
      cfg.beta_b = parse_double(key, value);
    } else if (key == "lambda_low") {
      cfg.lambda_low = parse_double(key, value);
    } else if (key == "lambda_high") {
      cfg.lambda_high = parse_double(key, value);
    } else if (key == "horizon") {
      cfg.horizon = static_cast<int>(parse_int(key, value));
    } else if (key == "gamma") {
      cfg.gamma = parse_double(key, value);
    } else if (key == "n_intervals") {
      cfg.n_intervals = static_cast<int>(parse_int(key, value));
    } else if (key == "scenario") {
      const auto s = scenario_selection_from_string(value);
      if (!s) throw Error(errc::invalid_value, "scenario");
      cfg.scenario = *s;
    } else if (key == "ge_alpha") {
      cfg.ge_alpha = parse_double(key, value);
    } else if (key == "atkinson_epsilon") {
      cfg.atkinson_epsilon = parse_double(key, value);
    } else if (key == "n_bins") {
      cfg.n_bins = static_cast<int>(parse_int(key, value));
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
    } else if (key == "n_seeds") {
      cfg.n_seeds = static_cast<int>(parse_int(key, value));
    } else if (key == "boost_at_start") {
      cfg.boost_at_start = parse_bool(key, value);
    } else if (key == "record_after_boost") {
      cfg.record_after_boost = parse_bool(key, value);
    } else {
      throw Error(errc::parse_error, "unknown key " + key);
    }
  }
  cfg.validate();
  return cfg;
}

std::string serialize_config(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "n_agents = " << cfg.n_agents << "\n"
      << "p_intra = " << format_double(cfg.p_intra) << "\n"
      << "p_inter = " << format_double(cfg.p_inter) << "\n"
      << "weight_low = " << format_double(cfg.weight_low) << "\n"
      << "weight_high = " << format_double(cfg.weight_high) << "\n"
      << "beta_a = " << format_double(cfg.beta_a) << "\n"
      << "beta_b = " << format_double(cfg.beta_b) << "\n"
      << "lambda_low = " << format_double(cfg.lambda_low) << "\n"
      << "lambda_high = " << format_double(cfg.lambda_high) << "\n"
      << "horizon = " << cfg.horizon << "\n"
      << "gamma = " << format_double(cfg.gamma) << "\n"
      << "n_intervals = " << cfg.n_intervals << "\n"
      << "scenario = " << to_string(cfg.scenario) << "\n"
      << "ge_alpha = " << format_double(cfg.ge_alpha) << "\n"
      << "atkinson_epsilon = " << format_double(cfg.atkinson_epsilon) << "\n"
      << "n_bins = " << cfg.n_bins << "\n"
      << "seed = " << cfg.seed << "\n"
      << "n_seeds = " << cfg.n_seeds << "\n"
      << "boost_at_start = " << (cfg.boost_at_start ? "true" : "false") << "\n"
      << "record_after_boost = "
      << (cfg.record_after_boost ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace epifair
