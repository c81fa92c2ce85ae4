#include "epifair/network.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace epifair {

GroupAssignment split_half(std::size_t n) {
  GroupAssignment g;
  g.labels.resize(n, Group::B);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) g.labels[i] = Group::A;
  return g;
}

std::size_t AdjacencyMatrix::edge_count() const {
  std::size_t count = 0;
  for (auto e : entries) count += e;
  return count;
}

double InfluenceMatrix::row_sum(std::size_t i) const {
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += at(i, j);
  return s;
}

AdjacencyMatrix generate_sbm(const GroupAssignment& group, double p_intra,
                             double p_inter, Rng& rng) {
  if (p_intra < 0.0 || p_intra > 1.0 || p_inter < 0.0 || p_inter > 1.0 ||
      p_inter > p_intra)
    throw Error(errc::invalid_probability,
                "need 0 <= p_inter <= p_intra <= 1");
  const std::size_t n = group.size();
  AdjacencyMatrix adj;
  adj.n = n;
  adj.entries.assign(n * n, 0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double p =
          group.labels[i] == group.labels[j] ? p_intra : p_inter;
      if (u(rng) < p) adj.entries[i * n + j] = 1;
    }
  }
  return adj;
}

InfluenceMatrix init_influence(const AdjacencyMatrix& adj, double weight_low,
                               double weight_high, Rng& rng) {
  if (weight_low >= weight_high || weight_low < 0.0)
    throw Error(errc::invalid_value, "bad weight range");
  InfluenceMatrix raw;
  raw.n = adj.n;
  raw.weights.assign(adj.n * adj.n, 0.0);
  std::uniform_real_distribution<double> u(weight_low, weight_high);
  for (std::size_t i = 0; i < adj.n; ++i)
    for (std::size_t j = 0; j < adj.n; ++j)
      if (adj.at(i, j)) raw.at(i, j) = u(rng);
  return row_normalize(raw);
}

InfluenceMatrix row_normalize(const InfluenceMatrix& raw) {
  InfluenceMatrix w = raw;
  const std::size_t n = w.n;
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = w.at(i, j);
      if (v < 0.0) throw Error(errc::negative_entry, "negative weight");
      sum += v;
    }
    if (sum == 0.0) {
      const double uniform = 1.0 / static_cast<double>(n);
      for (std::size_t j = 0; j < n; ++j) w.at(i, j) = uniform;
    } else {
      for (std::size_t j = 0; j < n; ++j) w.at(i, j) /= sum;
    }
  }
  return w;
}

Distribution incoming_attention(const InfluenceMatrix& w) {
  Distribution d;
  d.values.assign(w.n, 0.0);
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = 0; j < w.n; ++j) d.values[j] += w.at(i, j);
  return d;
}

void write_matrix_csv(const InfluenceMatrix& w, std::ostream& out) {
  out << "n=" << w.n << "\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < w.n; ++i) {
    for (std::size_t j = 0; j < w.n; ++j) {
      if (j) out << ',';
      out << w.at(i, j);
    }
    out << "\n";
  }
}

InfluenceMatrix read_matrix_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("n=", 0) != 0)
    throw Error(errc::parse_error, "expected header line n=<N>");
  std::size_t n = 0;
  try {
    n = static_cast<std::size_t>(std::stoull(header.substr(2)));
  } catch (const std::exception&) {
    throw Error(errc::parse_error, "bad matrix size in header");
  }
  if (n == 0) throw Error(errc::parse_error, "matrix size must be positive");
  InfluenceMatrix w;
  w.n = n;
  w.weights.reserve(n * n);
  std::string line;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line))
      throw Error(errc::parse_error, "truncated matrix");
    std::istringstream row(line);
    std::string cell;
    std::size_t j = 0;
    while (std::getline(row, cell, ',')) {
      w.weights.push_back(std::stod(cell));
      ++j;
    }
    if (j != n) throw Error(errc::parse_error, "row width mismatch");
  }
  return w;
}

}  // namespace epifair
