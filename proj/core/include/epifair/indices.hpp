#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epifair/errors.hpp"

namespace epifair {

/// Nonnegative per-agent resource magnitudes, optionally tagged with group
/// labels. The universal input of every index in this module.
struct Distribution {
  std::vector<double> values;
  std::vector<std::string> groups;  // empty, or same length as values
  std::string tag;                  // free-form provenance label, e.g. a
                                    // deficit kind; ignored by every index

  std::size_t size() const noexcept { return values.size(); }
  bool has_groups() const noexcept { return !groups.empty(); }

  /// Throws on negative/non-finite entries, empty input, or a group column
  /// whose length disagrees with the values.
  void validate() const;
};

/// Per-bin counts of two groups, plus their totals.
struct BinnedGroupCounts {
  struct Bin {
    std::int64_t a = 0;
    std::int64_t b = 0;
  };
  std::vector<Bin> bins;
  std::string label_a;
  std::string label_b;

  std::int64_t total_a() const noexcept;
  std::int64_t total_b() const noexcept;
};

/// Value-or-error slot of an IndexPanel. `error` is nonempty iff `value`
/// is absent.
struct PanelEntry {
  std::optional<double> value;
  std::string error;

  bool ok() const noexcept { return value.has_value(); }
};

/// One audit snapshot: every index evaluated on a single distribution.
/// A degenerate distribution yields per-field errors, never a missing panel.
struct IndexPanel {
  PanelEntry jain;
  PanelEntry gini;
  PanelEntry hoover;
  std::map<double, PanelEntry> ge;        // keyed by alpha
  std::map<double, PanelEntry> atkinson;  // keyed by epsilon
  std::optional<PanelEntry> dissimilarity;
  PanelEntry palma;
  PanelEntry s80_s20;
};

/// Evenness ratio (sum)^2 / (N * sum of squares); range [1/N, 1].
double jain(const Distribution& d);

/// Mean pairwise absolute difference normalized by 2*mean; range [0, 1-1/N].
/// Computed via the sorted O(N log N) form; matches the pairwise double sum.
double gini(const Distribution& d);

/// Share of the total that must move to reach equality; range [0, 1-1/N].
double hoover(const Distribution& d);

/// Generalized entropy GE(alpha). alpha = 0 is Theil L, alpha = 1 is Theil T
/// (with the convention 0*ln(0) = 0). Zero values are rejected for alpha <= 0
/// because the corresponding terms diverge.
double generalized_entropy(const Distribution& d, double alpha);

/// Atkinson index A(epsilon), epsilon >= 0; range [0, 1]. Any zero value with
/// epsilon >= 1 returns exactly 1 (the formula's limit).
double atkinson(const Distribution& d, double epsilon);

/// Dissimilarity index: half the summed absolute gaps between the two groups'
/// per-bin proportions; range [0, 1].
double dissimilarity(const BinnedGroupCounts& c);

/// Partitions the pooled population into n_bins quantile bins by value
/// (ties broken by original index, stable ascending) and counts each of the
/// two groups per bin. Requires exactly two distinct labels and N >= n_bins.
BinnedGroupCounts quantile_bin(const Distribution& d, int n_bins);

/// Share held by the top 10% of agents over the share held by the bottom 40%.
/// Cutoffs split the boundary agent's value fractionally so exactly 0.1*N and
/// 0.4*N population mass is counted, making the ratio replication-invariant.
double palma(const Distribution& d);

/// Top-quintile total over bottom-quintile total, same fractional-cutoff rule
/// as palma.
double quintile_share_ratio(const Distribution& d);

/// One-call snapshot. Each field equals the corresponding single-index
/// operation; a field whose operation throws records the error code instead
/// of aborting the panel. Dissimilarity is computed only when the
/// distribution carries groups and n_bins is given.
IndexPanel compute_panel(const Distribution& d,
                         const std::vector<double>& ge_alphas,
                         const std::vector<double>& atkinson_epsilons,
                         std::optional<int> n_bins);

}  // namespace epifair
