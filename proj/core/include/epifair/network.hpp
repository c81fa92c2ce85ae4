#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "epifair/errors.hpp"
#include "epifair/indices.hpp"

namespace epifair {

/// Seedable generator fixed for the whole project. Determinism is
/// guaranteed within one build; cross-implementation equality is
/// distributional only.
using Rng = std::mt19937_64;

enum class Group : std::uint8_t { A, B };

inline const char* to_string(Group g) noexcept {
  return g == Group::A ? "A" : "B";
}

struct GroupAssignment {
  std::vector<Group> labels;

  std::size_t size() const noexcept { return labels.size(); }
};

/// First ceil(n/2) agents in group A, the rest in group B.
GroupAssignment split_half(std::size_t n);

/// Directed 0/1 adjacency with zero diagonal, row-major.
struct AdjacencyMatrix {
  std::size_t n = 0;
  std::vector<std::uint8_t> entries;  // n*n

  bool at(std::size_t i, std::size_t j) const {
    return entries[i * n + j] != 0;
  }
  std::size_t edge_count() const;
};

/// Dense row-stochastic attention matrix; w(i,j) is the attention agent i
/// assigns to agent j.
struct InfluenceMatrix {
  std::size_t n = 0;
  std::vector<double> weights;  // n*n, row-major

  double at(std::size_t i, std::size_t j) const { return weights[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return weights[i * n + j]; }
  double row_sum(std::size_t i) const;
};

/// Two-block stochastic block model: each ordered pair (i,j), i != j, gets an
/// edge independently with probability p_intra (same group) or p_inter.
AdjacencyMatrix generate_sbm(const GroupAssignment& group, double p_intra,
                             double p_inter, Rng& rng);

/// Draws w(i,j) ~ Uniform(weight_low, weight_high) on edges, 0 elsewhere,
/// then row-normalizes. Rows with no outgoing edge become uniform 1/N.
InfluenceMatrix init_influence(const AdjacencyMatrix& adj, double weight_low,
                               double weight_high, Rng& rng);

/// Divides each nonzero row by its sum; all-zero rows are replaced by the
/// uniform row 1/N (including the diagonal position). Idempotent on
/// row-stochastic input.
InfluenceMatrix row_normalize(const InfluenceMatrix& raw);

/// Column sums: the incoming attention nu_in per agent. Totals N.
Distribution incoming_attention(const InfluenceMatrix& w);

/// Dense CSV, row-major, first line `n=<N>`.
void write_matrix_csv(const InfluenceMatrix& w, std::ostream& out);
InfluenceMatrix read_matrix_csv(std::istream& in);

}  // namespace epifair
