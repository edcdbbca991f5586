#pragma once

#include "cramsim/device.hpp"
#include "cramsim/vec3.hpp"

namespace cramsim {

// Interfacial anisotropy energy density under bias [J/m^2].
// Affine in v; may go negative (perpendicular anisotropy destroyed).
double interfacial_anisotropy(const DeviceParams& dev, double v);

// Thermal stability factor Delta(v). Rejects temperature = 0.
double thermal_stability(const DeviceParams& dev, double v);

// Per-component standard deviation of the thermal field [T].
// pinned mode returns sigma_pinned_t; computed mode evaluates the
// fluctuation-dissipation expression for time step dt. Zero at T = 0.
double thermal_field_sigma(const DeviceParams& dev, double dt);

// Perpendicular anisotropy field (0, 0, 2·K(v)/(mu0·Ms·t_f)·m_z) [A/m].
Vec3 anisotropy_field(const DeviceParams& dev, double v, double m_z);

// Thin-film demagnetization field (0, 0, -Ms·m_z) [A/m].
Vec3 demag_field(const DeviceParams& dev, const Vec3& m);

// H_ext + H_d(m) + h_thermal + H_K(v, m_z) [A/m].
Vec3 effective_field(const DeviceParams& dev, const Vec3& m, double v, const Vec3& h_thermal);

// Temperature-corrected spin polarization p0·(1 - alpha_sp·T^1.5).
double polarization(const DeviceParams& dev, double t_kelvin);

// Junction resistance mid-switch: cosine conductance interpolation between
// R_P and R_AP(v) as a function of m_z (fixed layer along +z).
double mid_switch_resistance(const DeviceParams& dev, double m_z, double t_kelvin, double v);

// Energy barrier from the field formulation, mu0·Ms·(H_K - Ms)·V_F/2 [J].
double energy_barrier_field_form(const DeviceParams& dev, double v);

}  // namespace cramsim
