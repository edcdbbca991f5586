#pragma once

#include <optional>
#include <vector>

#include "cramsim/device.hpp"
#include "cramsim/rng.hpp"
#include "cramsim/vec3.hpp"

namespace cramsim {

// Rectangular voltage pulse followed by a zero-bias relaxation window.
// amplitude is signed: positive drives the P->AP transition and reduces the
// perpendicular anisotropy when xi > 0.
struct PulseSpec {
  double amplitude = 0.0;    // [V]
  double duration = 1e-9;    // [s]
  double dt = 1e-12;         // [s]
  double relax_time = 2e-9;  // [s]

  void validate() const;
};

struct Trajectory {
  std::vector<double> t;  // sample times, strictly increasing; empty unless recorded
  std::vector<Vec3> m;
  bool switched = false;
  std::optional<double> switch_time;  // first detection-threshold crossing
  Vec3 m_final{};
};

// One stochastic Heun step of the LLG equation with explicit current density j
// [A/m^2]. Thermal field drawn fresh (isotropic, same draw for predictor and
// corrector); result renormalized. Rejects non-unit m beyond 1e-6.
Vec3 llg_step(const DeviceParams& dev, const Vec3& m, double v_mtj, double j, double dt,
              RngStream& rng);

// Full pulse + relaxation simulation from a thermally distributed initial
// angle around the given well. Current density is recomputed every step from
// the mid-switch (conductance-interpolated) resistance at the instantaneous
// m_z. Detection: switched iff m_z·(initial well sign) < -0.5 at the end of
// the relaxation window.
Trajectory simulate_pulse(const DeviceParams& dev, const PulseSpec& pulse,
                          MtjState initial_state, RngStream& rng, bool record = false);

}  // namespace cramsim
