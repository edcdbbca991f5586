#pragma once

#include <optional>
#include <string>

#include "cramsim/vec3.hpp"

namespace cramsim {

enum class NoiseMode { pinned, computed };

enum class MtjState : int { P = 0, AP = 1 };

// Free-layer / junction parameter set. All values SI.
// k_int0 is never entered directly; calibrate() derives it from tsf_target.
struct DeviceParams {
  double lx = 45e-9;           // free-layer width [m]
  double ly = 45e-9;           // free-layer length [m]
  double t_f = 0.75e-9;        // free-layer thickness [m]
  double t_ox = 1e-9;          // oxide thickness [m]
  double t_c = 1.5e-9;         // critical layer thickness [m]; stored, unused by the model
  double ra_p = 5e-12;         // resistance-area product, P state [ohm·m^2]
  double ms0 = 9.5e5;          // saturation magnetization at 0 K [A/m]
  double p0 = 0.54;            // spin polarization at 0 K
  double alpha = 0.02;         // Gilbert damping
  double xi = 0.0;             // VCMA coefficient [J/(V·m)]
  double k_int0 = 0.0;         // zero-bias interfacial anisotropy [J/m^2]; set by calibrate()
  double tsf_target = 45.7;    // target thermal stability factor
  double alpha_sp = 2e-5;      // polarization temperature coefficient [K^-1.5]
  double v0 = 0.6;             // bias at which TMR halves [V]
  Vec3 h_ext{0.0, 0.0, 0.0};   // external field [A/m]
  double temperature = 300.0;  // [K]
  std::optional<double> tmr_override;  // replaces the zero-bias TMR when set

  NoiseMode noise_mode = NoiseMode::pinned;
  double sigma_pinned_t = 4.5e-3;  // pinned thermal-field std per component [T]

  double area() const { return lx * ly; }
  double volume() const { return lx * ly * t_f; }

  // Throws config_error naming the offending field.
  void validate() const;
};

// k_int0 such that the zero-bias thermal stability equals tsf_target exactly.
double calibrate_zero_bias_anisotropy(const DeviceParams& dev);

// Calibrated copy (validate + k_int0 assignment).
DeviceParams calibrated(DeviceParams dev);

// Modified Julliere ratio with bias roll-off. tmr_override replaces the
// zero-bias value while keeping the roll-off factor.
double tmr_ratio(const DeviceParams& dev, double t_kelvin, double v);

// R_P = ra_p/A, bias independent; R_AP(v) = R_P·(1 + TMR(T, v)).
double resistance(const DeviceParams& dev, MtjState state, double t_kelvin, double v);

}  // namespace cramsim
