#pragma once

#include <vector>

#include "epifair/network.hpp"

namespace epifair {

struct OpinionState {
  std::vector<double> x;  // each in [0,1]
  int t = 0;
};

struct Stubbornness {
  std::vector<double> lambda;  // each in (0,1)
};

/// One Beta(a, b) variate via two gamma draws.
double beta_sample(double a, double b, Rng& rng);

/// Group A: x ~ Beta(beta_a, beta_b); group B: x = 1 - Z with the same Beta.
/// Returns t = 0.
OpinionState sample_initial_opinions(const GroupAssignment& group,
                                     double beta_a, double beta_b, Rng& rng);

Stubbornness sample_stubbornness(std::size_t n, double lambda_low,
                                 double lambda_high, Rng& rng);

/// Friedkin-Johnsen update:
///   x_i(t+1) = lambda_i * x0_i + (1 - lambda_i) * sum_j w_ij x_j(t).
/// A convex combination, so the output stays in [0,1]; results are clipped
/// to the unit interval to absorb last-bit rounding in the row sums.
OpinionState fj_step(const OpinionState& x, const OpinionState& x0,
                     const Stubbornness& stubbornness,
                     const InfluenceMatrix& w);

}  // namespace epifair
