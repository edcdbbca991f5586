#include "cramsim/sptc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "cramsim/errors.hpp"

namespace cramsim {

namespace {
constexpr double kZ95 = 1.959963984540054;
}

void wilson_bounds(long k, long n, double& lo, double& hi) {
  const double p = static_cast<double>(k) / n;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // the interval endpoints are exact at the saturated counts
  lo = (k == 0) ? 0.0 : std::max(0.0, center - half);
  hi = (k == n) ? 1.0 : std::min(1.0, center + half);
}

std::vector<double> isotonic_fit(const std::vector<double>& y) {
  const size_t n = y.size();
  std::vector<double> value;   // block means
  std::vector<double> weight;  // block sizes
  value.reserve(n);
  weight.reserve(n);
  for (double yi : y) {
    value.push_back(yi);
    weight.push_back(1.0);
    while (value.size() > 1 && value[value.size() - 2] > value.back()) {
      const double w = weight.back() + weight[weight.size() - 2];
      const double v =
          (value.back() * weight.back() + value[value.size() - 2] * weight[weight.size() - 2]) / w;
      value.pop_back();
      weight.pop_back();
      value.back() = v;
      weight.back() = w;
    }
  }
  std::vector<double> out;
  out.reserve(n);
  for (size_t b = 0; b < value.size(); ++b)
    for (long i = 0; i < std::lround(weight[b]); ++i) out.push_back(value[b]);
  return out;
}

Sptc run_campaign(const std::vector<double>& v_grid, int n_trials, uint64_t seed,
                  int parallelism,
                  const std::function<bool(size_t, long, RngStream&)>& trial_fn) {
  if (v_grid.empty()) throw config_error("campaign: voltage grid is empty");
  if (v_grid.front() < 0.0)
    throw config_error("campaign: grid values are magnitudes, must be >= 0");
  for (size_t i = 1; i < v_grid.size(); ++i)
    if (!(v_grid[i] > v_grid[i - 1]))
      throw config_error("campaign: voltage grid must be strictly increasing");
  if (n_trials < 1) throw config_error("campaign: n_trials must be >= 1");

  int workers = parallelism;
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  const size_t n_v = v_grid.size();
  const long total = static_cast<long>(n_v) * n_trials;
  workers = static_cast<int>(std::min<long>(workers, total));

  // Each worker owns a private count vector; per-trial streams make the
  // outcome independent of the work partition.
  std::vector<std::vector<long>> counts(workers, std::vector<long>(n_v, 0));
  std::atomic<long> next_job{0};
  constexpr long kChunk = 64;

  auto body = [&](int w) {
    for (;;) {
      const long begin = next_job.fetch_add(kChunk);
      if (begin >= total) break;
      const long end = std::min(begin + kChunk, total);
      for (long job = begin; job < end; ++job) {
        const size_t vi = static_cast<size_t>(job / n_trials);
        const long trial = job % n_trials;
        RngStream rng(seed, (static_cast<uint64_t>(vi) << 32) | static_cast<uint64_t>(trial));
        if (trial_fn(vi, trial, rng)) ++counts[w][vi];
      }
    }
  };

  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& th : pool) th.join();
  }

  Sptc s;
  s.v = v_grid;
  s.n_trials = n_trials;
  s.seed = seed;
  s.p_raw.resize(n_v);
  s.ci_lo.resize(n_v);
  s.ci_hi.resize(n_v);
  for (size_t i = 0; i < n_v; ++i) {
    long k = 0;
    for (int w = 0; w < workers; ++w) k += counts[w][i];
    s.p_raw[i] = static_cast<double>(k) / n_trials;
    wilson_bounds(k, n_trials, s.ci_lo[i], s.ci_hi[i]);
  }
  s.p_iso = isotonic_fit(s.p_raw);
  return s;
}

Sptc run_sptc(const DeviceParams& dev, const PulseSpec& pulse_template,
              const std::vector<double>& v_grid, int n_trials, uint64_t seed,
              int parallelism) {
  pulse_template.validate();
  for (double v : v_grid)
    if (v < 0.0) throw config_error("campaign: grid voltages are magnitudes, must be >= 0");
  const double polarity = (pulse_template.amplitude < 0.0) ? -1.0 : 1.0;
  const MtjState start = (polarity > 0.0) ? MtjState::P : MtjState::AP;

  Sptc s = run_campaign(
      v_grid, n_trials, seed, parallelism,
      [&](size_t vi, long, RngStream& rng) {
        PulseSpec p = pulse_template;
        p.amplitude = polarity * v_grid[vi];
        return simulate_pulse(dev, p, start, rng).switched;
      });
  s.polarity = polarity;
  s.dev = dev;
  s.pulse = pulse_template;
  return s;
}

double cross_level(const Sptc& s, double level) {
  const auto& p = s.p_iso;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= level) {
      if (i == 0) return s.v[0];
      const double t = (level - p[i - 1]) / (p[i] - p[i - 1]);
      return s.v[i - 1] + t * (s.v[i] - s.v[i - 1]);
    }
  }
  throw numeric_error("sptc: curve never reaches probability level (grid too narrow)");
}

double v50(const Sptc& s) { return cross_level(s, 0.5); }

double prob_at(const Sptc& s, double v) {
  if (v <= s.v.front()) return s.p_iso.front();
  if (v >= s.v.back()) return s.p_iso.back();
  const auto it = std::upper_bound(s.v.begin(), s.v.end(), v);
  const auto i = static_cast<size_t>(it - s.v.begin());
  const double t = (v - s.v[i - 1]) / (s.v[i] - s.v[i - 1]);
  return s.p_iso[i - 1] + t * (s.p_iso[i] - s.p_iso[i - 1]);
}

double steepness(const Sptc& s) { return cross_level(s, 0.9) - cross_level(s, 0.1); }

std::vector<ComplementRow> complement_curves(const Sptc& s) {
  const double v_half = v50(s);
  std::vector<ComplementRow> rows;
  rows.reserve(s.v.size());
  for (size_t i = 0; i < s.v.size(); ++i) {
    ComplementRow r;
    r.v_norm = s.v[i] / v_half;
    // Wilson bounds stand in as resolution floors where the fraction saturates.
    r.p = (s.p_iso[i] > 0.0) ? s.p_iso[i] : s.ci_hi[i];
    r.q = (s.p_iso[i] < 1.0) ? 1.0 - s.p_iso[i] : 1.0 - s.ci_lo[i];
    rows.push_back(r);
  }
  return rows;
}

}  // namespace cramsim
