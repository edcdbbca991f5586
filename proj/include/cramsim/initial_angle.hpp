#pragma once

#include <vector>

#include "cramsim/rng.hpp"

namespace cramsim {

// Draws polar angles from the equilibrium well distribution with density
// proportional to sin(theta)·exp(-delta·sin^2(theta)) on [0, pi/2].
// Inverse-CDF lookup: 8192 intervals, trapezoid cumulative, linear
// interpolation. Build once per campaign; sampling is two array reads.
class InitialAngleSampler {
 public:
  explicit InitialAngleSampler(double delta);

  double delta() const { return delta_; }

  // Maps a uniform [0,1) variate to theta. Strictly monotone in u.
  double theta_from_uniform(double u) const;

  double sample(RngStream& rng) const { return theta_from_uniform(rng.uniform()); }

  // CDF value at theta (linear interpolation of the table); used by tests.
  double cdf(double theta) const;

  static constexpr int table_intervals = 8192;

 private:
  double delta_;
  std::vector<double> theta_;  // grid on [0, pi/2]
  std::vector<double> cdf_;    // normalized cumulative, cdf_[0]=0, back()=1
};

// Convenience one-shot form; caches samplers per delta value.
double sample_initial_angle(double delta, RngStream& rng);

}  // namespace cramsim
