#include "cramsim/physics.hpp"

#include <cmath>

#include "cramsim/constants.hpp"
#include "cramsim/errors.hpp"

namespace cramsim {

double interfacial_anisotropy(const DeviceParams& dev, double v) {
  return dev.k_int0 - dev.xi * v / dev.t_ox;
}

double thermal_stability(const DeviceParams& dev, double v) {
  if (dev.temperature <= 0.0)
    throw domain_error("thermal_stability: undefined at temperature = 0");
  const double demag = consts::mu0 * dev.ms0 * dev.ms0 * dev.t_f / 2.0;
  return (interfacial_anisotropy(dev, v) - demag) * dev.area() /
         (consts::k_b * dev.temperature);
}

double thermal_field_sigma(const DeviceParams& dev, double dt) {
  if (dt <= 0.0) throw domain_error("thermal_field_sigma: dt must be > 0");
  if (dev.temperature == 0.0) return 0.0;
  if (dev.noise_mode == NoiseMode::pinned) return dev.sigma_pinned_t;
  return std::sqrt(2.0 * consts::k_b * dev.alpha * dev.temperature /
                   (consts::mu0 * consts::gamma_e * dev.volume() * dev.ms0 * dt));
}

Vec3 anisotropy_field(const DeviceParams& dev, double v, double m_z) {
  const double h_k = 2.0 * interfacial_anisotropy(dev, v) /
                     (consts::mu0 * dev.ms0 * dev.t_f);
  return {0.0, 0.0, h_k * m_z};
}

Vec3 demag_field(const DeviceParams& dev, const Vec3& m) {
  return {0.0, 0.0, -dev.ms0 * m.z};
}

Vec3 effective_field(const DeviceParams& dev, const Vec3& m, double v, const Vec3& h_thermal) {
  return dev.h_ext + demag_field(dev, m) + h_thermal + anisotropy_field(dev, v, m.z);
}

double polarization(const DeviceParams& dev, double t_kelvin) {
  return dev.p0 * (1.0 - dev.alpha_sp * std::pow(t_kelvin, 1.5));
}

double mid_switch_resistance(const DeviceParams& dev, double m_z, double t_kelvin, double v) {
  // G(m_z) = (G_P + G_AP)/2 + (G_P - G_AP)/2 · m_z·m_pz, i.e. the cosine
  // conductance model; written in resistance form. Fixed layer m_pz = +1.
  const double r_p = dev.ra_p / dev.area();
  const double r_ap = r_p * (1.0 + tmr_ratio(dev, t_kelvin, v));
  return 2.0 * r_p * r_ap / ((r_p + r_ap) + (r_ap - r_p) * m_z);
}

double energy_barrier_field_form(const DeviceParams& dev, double v) {
  const Vec3 hk = anisotropy_field(dev, v, 1.0);
  return consts::mu0 * dev.ms0 * (hk.z - dev.ms0) * dev.volume() / 2.0;
}

}  // namespace cramsim
