#include "epifair/dynamics.hpp"

#include <algorithm>

namespace epifair {

double beta_sample(double a, double b, Rng& rng) {
  std::gamma_distribution<double> ga(a, 1.0);
  std::gamma_distribution<double> gb(b, 1.0);
  const double x = ga(rng);
  const double y = gb(rng);
  return x / (x + y);
}

OpinionState sample_initial_opinions(const GroupAssignment& group,
                                     double beta_a, double beta_b, Rng& rng) {
  OpinionState s;
  s.t = 0;
  s.x.reserve(group.size());
  for (Group g : group.labels) {
    const double z = beta_sample(beta_a, beta_b, rng);
    s.x.push_back(g == Group::A ? z : 1.0 - z);
  }
  return s;
}

Stubbornness sample_stubbornness(std::size_t n, double lambda_low,
                                 double lambda_high, Rng& rng) {
  if (lambda_low <= 0.0 || lambda_high >= 1.0 || lambda_low >= lambda_high)
    throw Error(errc::invalid_value, "lambda bounds must satisfy 0 < low < high < 1");
  Stubbornness s;
  s.lambda.reserve(n);
  std::uniform_real_distribution<double> u(lambda_low, lambda_high);
  for (std::size_t i = 0; i < n; ++i) s.lambda.push_back(u(rng));
  return s;
}

OpinionState fj_step(const OpinionState& x, const OpinionState& x0,
                     const Stubbornness& stubbornness,
                     const InfluenceMatrix& w) {
  const std::size_t n = x.x.size();
  if (x0.x.size() != n || stubbornness.lambda.size() != n || w.n != n)
    throw Error(errc::dimension_mismatch, "inconsistent lengths in fj_step");
  OpinionState next;
  next.t = x.t + 1;
  next.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double neighborhood = 0.0;
    for (std::size_t j = 0; j < n; ++j) neighborhood += w.at(i, j) * x.x[j];
    const double lam = stubbornness.lambda[i];
    const double v = lam * x0.x[i] + (1.0 - lam) * neighborhood;
    next.x[i] = std::clamp(v, 0.0, 1.0);
  }
  return next;
}

}  // namespace epifair
