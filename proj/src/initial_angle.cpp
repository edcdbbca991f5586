#include "cramsim/initial_angle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "cramsim/constants.hpp"
#include "cramsim/errors.hpp"

namespace cramsim {

InitialAngleSampler::InitialAngleSampler(double delta) : delta_(delta) {
  if (delta <= 0.0) throw domain_error("initial angle: delta must be > 0");
  const int n = table_intervals;
  theta_.resize(n + 1);
  cdf_.resize(n + 1);
  std::vector<double> f(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double th = (consts::pi / 2.0) * i / n;
    const double s = std::sin(th);
    theta_[i] = th;
    f[i] = s * std::exp(-delta * s * s);
  }
  cdf_[0] = 0.0;
  for (int i = 1; i <= n; ++i) cdf_[i] = cdf_[i - 1] + 0.5 * (f[i] + f[i - 1]);
  const double total = cdf_[n];
  for (int i = 0; i <= n; ++i) cdf_[i] /= total;
}

double InitialAngleSampler::theta_from_uniform(double u) const {
  // first index with cdf >= u, then invert the linear segment
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.begin()) return theta_.front();
  if (it == cdf_.end()) return theta_.back();
  const auto i = static_cast<size_t>(it - cdf_.begin());
  const double c0 = cdf_[i - 1], c1 = cdf_[i];
  const double t = (c1 > c0) ? (u - c0) / (c1 - c0) : 0.0;
  return theta_[i - 1] + t * (theta_[i] - theta_[i - 1]);
}

double InitialAngleSampler::cdf(double theta) const {
  const auto it = std::lower_bound(theta_.begin(), theta_.end(), theta);
  if (it == theta_.begin()) return 0.0;
  if (it == theta_.end()) return 1.0;
  const auto i = static_cast<size_t>(it - theta_.begin());
  const double t = (theta - theta_[i - 1]) / (theta_[i] - theta_[i - 1]);
  return cdf_[i - 1] + t * (cdf_[i] - cdf_[i - 1]);
}

double sample_initial_angle(double delta, RngStream& rng) {
  static std::mutex mu;
  static std::map<double, InitialAngleSampler> cache;
  const InitialAngleSampler* sampler = nullptr;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(delta);
    if (it == cache.end()) it = cache.emplace(delta, InitialAngleSampler(delta)).first;
    sampler = &it->second;
  }
  return sampler->sample(rng);
}

}  // namespace cramsim
