#include "cramsim/device.hpp"

#include <cmath>

#include "cramsim/constants.hpp"
#include "cramsim/errors.hpp"

namespace cramsim {

void DeviceParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw config_error(std::string("device: ") + what);
  };
  require(lx > 0.0, "l_x must be > 0");
  require(ly > 0.0, "l_y must be > 0");
  require(t_f > 0.0, "t_f must be > 0");
  require(t_ox > 0.0, "t_ox must be > 0");
  require(t_c > 0.0, "t_c must be > 0");
  require(ra_p > 0.0, "ra_p must be > 0");
  require(ms0 > 0.0, "m_s0 must be > 0");
  require(p0 > 0.0 && p0 < 1.0, "p_0 must lie in (0, 1)");
  require(alpha > 0.0, "alpha must be > 0");
  require(temperature >= 0.0, "t must be >= 0");
  require(tsf_target > 0.0, "tsf must be > 0");
  require(v0 > 0.0, "v_0 must be > 0");
  require(sigma_pinned_t >= 0.0, "sigma_pinned_t must be >= 0");
  if (tmr_override) require(*tmr_override > 0.0, "tmr_override must be > 0");
}

double calibrate_zero_bias_anisotropy(const DeviceParams& dev) {
  if (dev.tsf_target <= 0.0) throw domain_error("calibrate: tsf_target must be > 0");
  if (dev.temperature <= 0.0) throw domain_error("calibrate: temperature must be > 0");
  const double demag = consts::mu0 * dev.ms0 * dev.ms0 * dev.t_f / 2.0;
  return dev.tsf_target * consts::k_b * dev.temperature / dev.area() + demag;
}

DeviceParams calibrated(DeviceParams dev) {
  dev.validate();
  dev.k_int0 = calibrate_zero_bias_anisotropy(dev);
  return dev;
}

double tmr_ratio(const DeviceParams& dev, double t_kelvin, double v) {
  const double rolloff = 1.0 / (1.0 + (v / dev.v0) * (v / dev.v0));
  if (dev.tmr_override) return *dev.tmr_override * rolloff;
  const double p = dev.p0 * (1.0 - dev.alpha_sp * std::pow(t_kelvin, 1.5));
  const double denom = 1.0 - p * p;
  if (denom <= 0.0)
    throw domain_error("tmr_ratio: polarization factor makes 1 - P^2 <= 0");
  return 2.0 * p * p / denom * rolloff;
}

double resistance(const DeviceParams& dev, MtjState state, double t_kelvin, double v) {
  const double r_p = dev.ra_p / dev.area();
  if (state == MtjState::P) return r_p;
  return r_p * (1.0 + tmr_ratio(dev, t_kelvin, v));
}

}  // namespace cramsim
