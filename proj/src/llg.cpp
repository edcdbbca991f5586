#include "cramsim/llg.hpp"

#include <cmath>

#include "cramsim/constants.hpp"
#include "cramsim/errors.hpp"
#include "cramsim/initial_angle.hpp"
#include "cramsim/physics.hpp"

namespace cramsim {

void PulseSpec::validate() const {
  if (duration <= 0.0) throw config_error("pulse: duration must be > 0");
  if (dt <= 0.0 || dt > duration) throw config_error("pulse: need 0 < dt <= duration");
  if (relax_time < 0.0) throw config_error("pulse: relax_time must be >= 0");
}

namespace {

// Deterministic drift of dm/dt in tesla-field form:
//   -gamma' (m x B + alpha m x (m x B)) + gamma' b_stt (m m_z - e_z),
// with B = b_ext + b_noise + c_b m_z e_z and fixed layer along +z.
// c_b [T] collects the uniaxial terms: 2K(v)/(Ms t_f) - mu0 Ms.
struct FieldCtx {
  double c_b;      // easy-axis coefficient [T]
  Vec3 b_ext;      // mu0 * h_ext [T]
  double gamma_p;  // gamma/(1+alpha^2)
  double alpha;
};

inline Vec3 drift(const FieldCtx& c, const Vec3& m, const Vec3& b_noise, double b_stt) {
  const Vec3 b{c.b_ext.x + b_noise.x, c.b_ext.y + b_noise.y,
               c.b_ext.z + b_noise.z + c.c_b * m.z};
  const Vec3 t1 = cross(m, b);
  const Vec3 t2 = cross(m, t1);
  return {-c.gamma_p * (t1.x + c.alpha * t2.x) + c.gamma_p * b_stt * m.x * m.z,
          -c.gamma_p * (t1.y + c.alpha * t2.y) + c.gamma_p * b_stt * m.y * m.z,
          -c.gamma_p * (t1.z + c.alpha * t2.z) + c.gamma_p * b_stt * (m.z * m.z - 1.0)};
}

inline FieldCtx make_ctx(const DeviceParams& dev, double v) {
  FieldCtx c;
  c.c_b = 2.0 * interfacial_anisotropy(dev, v) / (dev.ms0 * dev.t_f) -
          consts::mu0 * dev.ms0;
  c.b_ext = consts::mu0 * dev.h_ext;
  c.alpha = dev.alpha;
  c.gamma_p = consts::gamma_e / (1.0 + dev.alpha * dev.alpha);
  return c;
}

inline double stt_field_per_j(const DeviceParams& dev) {
  return consts::hbar * polarization(dev, dev.temperature) /
         (2.0 * consts::e_charge * dev.t_f * dev.ms0);
}

}  // namespace

Vec3 llg_step(const DeviceParams& dev, const Vec3& m, double v_mtj, double j, double dt,
              RngStream& rng) {
  if (std::abs(norm(m) - 1.0) > 1e-6)
    throw domain_error("llg_step: magnetization must be a unit vector");
  if (dt <= 0.0) throw domain_error("llg_step: dt must be > 0");
  const FieldCtx ctx = make_ctx(dev, v_mtj);
  const double sigma = thermal_field_sigma(dev, dt);
  const Vec3 b_noise{sigma * rng.normal(), sigma * rng.normal(), sigma * rng.normal()};
  const double b_stt = stt_field_per_j(dev) * j;
  const Vec3 f1 = drift(ctx, m, b_noise, b_stt);
  const Vec3 mp = m + dt * f1;
  const Vec3 f2 = drift(ctx, mp, b_noise, b_stt);
  return normalized(m + (dt / 2.0) * (f1 + f2));
}

Trajectory simulate_pulse(const DeviceParams& dev, const PulseSpec& pulse,
                          MtjState initial_state, RngStream& rng, bool record) {
  pulse.validate();
  const double well = (initial_state == MtjState::P) ? 1.0 : -1.0;
  const double dt = pulse.dt;

  // initial angle from the zero-bias equilibrium distribution
  double theta = 0.0;
  if (dev.temperature > 0.0) {
    theta = sample_initial_angle(thermal_stability(dev, 0.0), rng);
  }
  const double phi = 2.0 * consts::pi * rng.uniform();
  Vec3 m{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
         well * std::cos(theta)};

  const auto n_pulse = static_cast<long>(std::llround(pulse.duration / dt));
  const auto n_relax = static_cast<long>(std::llround(pulse.relax_time / dt));

  const FieldCtx ctx_pulse = make_ctx(dev, pulse.amplitude);
  const FieldCtx ctx_relax = make_ctx(dev, 0.0);
  const double sigma = thermal_field_sigma(dev, dt);
  const double stt_per_j = stt_field_per_j(dev);
  const double r_p = dev.ra_p / dev.area();
  const double r_ap = r_p * (1.0 + tmr_ratio(dev, dev.temperature, pulse.amplitude));
  const double area = dev.area();
  const double v = pulse.amplitude;

  Trajectory traj;
  if (record) {
    traj.t.reserve(n_pulse + n_relax + 1);
    traj.m.reserve(n_pulse + n_relax + 1);
    traj.t.push_back(0.0);
    traj.m.push_back(m);
  }

  for (long k = 0; k < n_pulse + n_relax; ++k) {
    const bool in_pulse = k < n_pulse;
    const FieldCtx& ctx = in_pulse ? ctx_pulse : ctx_relax;
    const Vec3 b_noise{sigma * rng.normal(), sigma * rng.normal(), sigma * rng.normal()};

    double b1 = 0.0;
    if (in_pulse) {
      const double r = 2.0 * r_p * r_ap / ((r_p + r_ap) + (r_ap - r_p) * m.z);
      b1 = stt_per_j * v / (r * area);
    }
    const Vec3 f1 = drift(ctx, m, b_noise, b1);
    const Vec3 mp = m + dt * f1;

    double b2 = b1;
    if (in_pulse) {
      const double r = 2.0 * r_p * r_ap / ((r_p + r_ap) + (r_ap - r_p) * mp.z);
      b2 = stt_per_j * v / (r * area);
    }
    const Vec3 f2 = drift(ctx, mp, b_noise, b2);
    m = normalized(m + (dt / 2.0) * (f1 + f2));

    if (!traj.switch_time && m.z * well < -0.5) traj.switch_time = (k + 1) * dt;
    if (record) {
      traj.t.push_back((k + 1) * dt);
      traj.m.push_back(m);
    }
  }

  traj.m_final = m;
  traj.switched = (m.z * well < -0.5);
  return traj;
}

}  // namespace cramsim
