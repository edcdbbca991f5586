#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cramsim/device.hpp"
#include "cramsim/llg.hpp"

namespace cramsim {

// Switching-probability transfer curve over a magnitude voltage grid.
// p_iso is the isotonic (monotone nondecreasing) regression of p_raw;
// ci bounds are Wilson 95% intervals of p_raw.
struct Sptc {
  std::vector<double> v;
  std::vector<double> p_raw;
  std::vector<double> p_iso;
  std::vector<double> ci_lo;
  std::vector<double> ci_hi;
  int n_trials = 0;
  uint64_t seed = 0;
  double polarity = 1.0;
  DeviceParams dev;
  PulseSpec pulse;
};

// Wilson 95% score interval for k successes out of n.
void wilson_bounds(long k, long n, double& lo, double& hi);

// Pool-adjacent-violators projection onto nondecreasing sequences
// (equal weights, least squares).
std::vector<double> isotonic_fit(const std::vector<double>& y);

// Generic campaign engine. Runs n_trials Bernoulli trials per grid point,
// each on its own counter-based stream ((v_index << 32) | trial), and
// aggregates by counting — bit-identical for any parallelism degree.
// parallelism <= 0 selects the hardware concurrency.
Sptc run_campaign(const std::vector<double>& v_grid, int n_trials, uint64_t seed,
                  int parallelism,
                  const std::function<bool(size_t, long, RngStream&)>& trial_fn);

// Monte Carlo SPTC via simulate_pulse. The template's amplitude sign selects
// the polarity (and with it the starting well: positive pulses start from P,
// negative from AP); its magnitude is replaced by each grid value.
Sptc run_sptc(const DeviceParams& dev, const PulseSpec& pulse_template,
              const std::vector<double>& v_grid, int n_trials, uint64_t seed,
              int parallelism = 0);

// Linear-interpolated crossing of p_iso with the given level.
// Throws numeric_error if the curve never reaches it.
double cross_level(const Sptc& s, double level);

// 50% switching voltage.
double v50(const Sptc& s);

// Monotone piecewise-linear evaluation of p_iso; clamps outside the grid.
double prob_at(const Sptc& s, double v);

// 10%-to-90% voltage width.
double steepness(const Sptc& s);

struct ComplementRow {
  double v_norm;  // v / v50
  double p;       // switching probability (Wilson floor when p_iso = 0)
  double q;       // complement 1 - p (Wilson floor when p_iso = 1)
};

// Normalized original + complementary curves for logarithmic plotting.
std::vector<ComplementRow> complement_curves(const Sptc& s);

}  // namespace cramsim
