#include "epifair/indices.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace epifair {
namespace {

double checked_sum(const Distribution& d) {
  double sum = 0.0;
  for (double v : d.values) sum += v;
  if (sum <= 0.0) throw Error(errc::all_zero, "distribution sums to zero");
  return sum;
}

std::vector<double> sorted_values(const Distribution& d) {
  std::vector<double> s = d.values;
  std::sort(s.begin(), s.end());
  return s;
}

// Total value held by the cheapest `frac*N` units of population mass,
// splitting the boundary agent proportionally. `s` ascending.
double bottom_mass(const std::vector<double>& s, double frac) {
  const double target = frac * static_cast<double>(s.size());
  auto whole = static_cast<std::size_t>(std::floor(target + 1e-9));
  double part = target - static_cast<double>(whole);
  if (part < 1e-9) part = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < whole && i < s.size(); ++i) total += s[i];
  if (part > 0.0 && whole < s.size()) total += part * s[whole];
  return total;
}

double top_mass(const std::vector<double>& s, double frac) {
  std::vector<double> rev(s.rbegin(), s.rend());
  return bottom_mass(rev, frac);
}

double share_ratio(const Distribution& d, double top_frac, double bottom_frac) {
  d.validate();
  const auto s = sorted_values(d);
  const double bottom = bottom_mass(s, bottom_frac);
  if (bottom <= 0.0)
    throw Error(errc::zero_denominator, "bottom share holds zero total");
  return top_mass(s, top_frac) / bottom;
}

PanelEntry capture(const std::function<double()>& op) {
  PanelEntry e;
  try {
    e.value = op();
  } catch (const Error& err) {
    e.error = to_string(err.code());
  }
  return e;
}

}  // namespace

void Distribution::validate() const {
  if (values.empty()) throw Error(errc::invalid_value, "empty distribution");
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(errc::non_finite, "non-finite value");
    if (v < 0.0) throw Error(errc::negative_input, "negative value");
  }
  if (!groups.empty() && groups.size() != values.size())
    throw Error(errc::length_mismatch, "group column length mismatch");
}

std::int64_t BinnedGroupCounts::total_a() const noexcept {
  std::int64_t t = 0;
  for (const auto& bin : bins) t += bin.a;
  return t;
}

std::int64_t BinnedGroupCounts::total_b() const noexcept {
  std::int64_t t = 0;
  for (const auto& bin : bins) t += bin.b;
  return t;
}

double jain(const Distribution& d) {
  d.validate();
  const double sum = checked_sum(d);
  double sq = 0.0;
  for (double v : d.values) sq += v * v;
  return (sum * sum) / (static_cast<double>(d.size()) * sq);
}

double gini(const Distribution& d) {
  d.validate();
  const double sum = checked_sum(d);
  const auto s = sorted_values(d);
  const auto n = static_cast<double>(s.size());
  // (1/(2 N^2 mean)) * sum_ij |v_i - v_j|  ==  sum_i (2i - N - 1) v_(i) / (N sum)
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    acc += (2.0 * static_cast<double>(i + 1) - n - 1.0) * s[i];
  return acc / (n * sum);
}

double hoover(const Distribution& d) {
  d.validate();
  const double sum = checked_sum(d);
  const double mean = sum / static_cast<double>(d.size());
  double dev = 0.0;
  for (double v : d.values) dev += std::abs(v - mean);
  return dev / (2.0 * sum);
}

double generalized_entropy(const Distribution& d, double alpha) {
  d.validate();
  const double sum = checked_sum(d);
  const auto n = static_cast<double>(d.size());
  const double mean = sum / n;
  if (alpha <= 0.0) {
    for (double v : d.values)
      if (v == 0.0)
        throw Error(errc::zero_with_log_branch,
                    "zero value diverges for alpha <= 0");
  }
  if (alpha == 0.0) {  // Theil L
    double acc = 0.0;
    for (double v : d.values) acc += std::log(v / mean);
    return -acc / n;
  }
  if (alpha == 1.0) {  // Theil T, with 0*ln(0) = 0
    double acc = 0.0;
    for (double v : d.values) {
      const double r = v / mean;
      if (r > 0.0) acc += r * std::log(r);
    }
    return acc / n;
  }
  double acc = 0.0;
  for (double v : d.values) acc += std::pow(v / mean, alpha) - 1.0;
  return acc / (alpha * (alpha - 1.0) * n);
}

double atkinson(const Distribution& d, double epsilon) {
  d.validate();
  if (epsilon < 0.0)
    throw Error(errc::invalid_value, "epsilon must be nonnegative");
  const double sum = checked_sum(d);
  const auto n = static_cast<double>(d.size());
  const double mean = sum / n;
  const bool has_zero =
      std::any_of(d.values.begin(), d.values.end(),
                  [](double v) { return v == 0.0; });
  if (has_zero && epsilon >= 1.0) return 1.0;  // limiting convention
  if (epsilon == 1.0) {
    double log_acc = 0.0;
    for (double v : d.values) log_acc += std::log(v);
    return 1.0 - std::exp(log_acc / n) / mean;
  }
  double acc = 0.0;
  for (double v : d.values) acc += std::pow(v, 1.0 - epsilon);
  const double m = std::pow(acc / n, 1.0 / (1.0 - epsilon));
  return 1.0 - m / mean;
}

double dissimilarity(const BinnedGroupCounts& c) {
  const auto total_a = static_cast<double>(c.total_a());
  const auto total_b = static_cast<double>(c.total_b());
  if (total_a < 1.0 || total_b < 1.0)
    throw Error(errc::empty_group, "both groups must be nonempty");
  double acc = 0.0;
  for (const auto& bin : c.bins)
    acc += std::abs(static_cast<double>(bin.a) / total_a -
                    static_cast<double>(bin.b) / total_b);
  return acc / 2.0;
}

BinnedGroupCounts quantile_bin(const Distribution& d, int n_bins) {
  d.validate();
  if (!d.has_groups())
    throw Error(errc::not_two_groups, "distribution carries no groups");
  if (n_bins < 1) throw Error(errc::invalid_value, "n_bins must be positive");
  std::vector<std::string> labels = d.groups;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() != 2)
    throw Error(errc::not_two_groups, "exactly two group labels required");
  const std::size_t n = d.size();
  if (n < static_cast<std::size_t>(n_bins))
    throw Error(errc::too_few_agents, "fewer agents than bins");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return d.values[i] < d.values[j];
  });

  BinnedGroupCounts out;
  out.label_a = labels[0];
  out.label_b = labels[1];
  out.bins.resize(static_cast<std::size_t>(n_bins));
  for (std::size_t rank = 0; rank < n; ++rank) {
    const auto k = rank * static_cast<std::size_t>(n_bins) / n;
    if (d.groups[order[rank]] == out.label_a)
      ++out.bins[k].a;
    else
      ++out.bins[k].b;
  }
  return out;
}

double palma(const Distribution& d) { return share_ratio(d, 0.1, 0.4); }

double quintile_share_ratio(const Distribution& d) {
  return share_ratio(d, 0.2, 0.2);
}

IndexPanel compute_panel(const Distribution& d,
                         const std::vector<double>& ge_alphas,
                         const std::vector<double>& atkinson_epsilons,
                         std::optional<int> n_bins) {
  d.validate();
  IndexPanel panel;
  panel.jain = capture([&] { return jain(d); });
  panel.gini = capture([&] { return gini(d); });
  panel.hoover = capture([&] { return hoover(d); });
  for (double a : ge_alphas)
    panel.ge[a] = capture([&] { return generalized_entropy(d, a); });
  for (double e : atkinson_epsilons)
    panel.atkinson[e] = capture([&] { return atkinson(d, e); });
  if (d.has_groups() && n_bins)
    panel.dissimilarity =
        capture([&] { return dissimilarity(quantile_bin(d, *n_bins)); });
  panel.palma = capture([&] { return palma(d); });
  panel.s80_s20 = capture([&] { return quintile_share_ratio(d); });
  return panel;
}

}  // namespace epifair
