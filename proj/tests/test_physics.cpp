#include <cmath>

#include "doctest.h"

#include "cramsim/constants.hpp"
#include "cramsim/device.hpp"
#include "cramsim/errors.hpp"
#include "cramsim/physics.hpp"
#include "cramsim/rng.hpp"

using namespace cramsim;

namespace {
DeviceParams defaults_calibrated() { return calibrated(DeviceParams{}); }
}  // namespace

TEST_CASE("calibration hits the target stability factor") {
  const DeviceParams dev = defaults_calibrated();
  CHECK(dev.k_int0 == doctest::Approx(5.187681565260523e-4).epsilon(1e-12));
  CHECK(thermal_stability(dev, 0.0) == doctest::Approx(45.7).epsilon(1e-12));

  // round trip across the full plausible range
  RngStream rng(2024, 0);
  for (int i = 0; i < 50; ++i) {
    DeviceParams d;
    d.tsf_target = 20.0 + 80.0 * rng.uniform();
    d.temperature = 150.0 + 300.0 * rng.uniform();
    d.ms0 = 4e5 + 1e6 * rng.uniform();
    d = calibrated(d);
    CHECK(thermal_stability(d, 0.0) ==
          doctest::Approx(d.tsf_target).epsilon(1e-9));
  }
}

TEST_CASE("calibration scales linearly in the target") {
  DeviceParams d;
  d.tsf_target = 45.7;
  const double demag = consts::mu0 * d.ms0 * d.ms0 * d.t_f / 2.0;
  const double k1 = calibrate_zero_bias_anisotropy(d);
  d.tsf_target = 91.4;
  const double k2 = calibrate_zero_bias_anisotropy(d);
  CHECK(k2 - demag == doctest::Approx(2.0 * (k1 - demag)).epsilon(1e-12));
}

TEST_CASE("interfacial anisotropy is affine with slope -xi/t_ox") {
  DeviceParams dev = defaults_calibrated();
  dev.xi = 200e-15;
  const double slope = -dev.xi / dev.t_ox;
  for (double v : {-0.5, 0.3, 1.7}) {
    CHECK(interfacial_anisotropy(dev, v) ==
          doctest::Approx(dev.k_int0 + slope * v).epsilon(1e-12));
  }
  CHECK(interfacial_anisotropy(dev, 0.0) == dev.k_int0);
  dev.xi = 0.0;
  CHECK(interfacial_anisotropy(dev, 5.0) == dev.k_int0);
  dev.xi = 200e-15;
  CHECK(dev.k_int0 - interfacial_anisotropy(dev, 1.0) ==
        doctest::Approx(2.0e-4).epsilon(1e-12));
}

TEST_CASE("thermal stability collapses under bias") {
  DeviceParams dev = defaults_calibrated();
  dev.xi = 200e-15;
  CHECK(thermal_stability(dev, 1.0) == doctest::Approx(-52.0801019665389).epsilon(1e-10));
  CHECK(thermal_stability(dev, 0.5) < thermal_stability(dev, 0.0));

  dev.temperature = 0.0;
  CHECK_THROWS_AS(thermal_stability(dev, 0.0), domain_error);
}

TEST_CASE("field-formulation barrier equals the stability-factor barrier") {
  const DeviceParams dev = defaults_calibrated();
  const double e_field = energy_barrier_field_form(dev, 0.0);
  const double e_delta = thermal_stability(dev, 0.0) * consts::k_b * dev.temperature;
  CHECK(e_field == doctest::Approx(1.892869779e-19).epsilon(1e-9));
  CHECK(std::abs(e_field - e_delta) / e_delta < 1e-6);

  RngStream rng(77, 0);
  for (int i = 0; i < 20; ++i) {
    DeviceParams d;
    d.tsf_target = 20.0 + 80.0 * rng.uniform();
    d.ms0 = 5e5 + 8e5 * rng.uniform();
    d.t_f = (0.5 + rng.uniform()) * 1e-9;
    d = calibrated(d);
    const double ef = energy_barrier_field_form(d, 0.0);
    const double ed = d.tsf_target * consts::k_b * d.temperature;
    CHECK(std::abs(ef - ed) / ed < 1e-6);
  }
}

TEST_CASE("thermal field sigma") {
  DeviceParams dev = defaults_calibrated();

  SUBCASE("pinned mode ignores dt") {
    CHECK(thermal_field_sigma(dev, 1e-12) == 4.5e-3);
    CHECK(thermal_field_sigma(dev, 1e-9) == 4.5e-3);
  }
  SUBCASE("computed mode follows the fluctuation-dissipation law") {
    dev.noise_mode = NoiseMode::computed;
    CHECK(thermal_field_sigma(dev, 1e-12) ==
          doctest::Approx(22.78033024286893).epsilon(1e-12));
    const double s1 = thermal_field_sigma(dev, 1e-12);
    CHECK(thermal_field_sigma(dev, 0.25e-12) == doctest::Approx(2.0 * s1).epsilon(1e-12));
    dev.temperature = 75.0;  // T/4
    CHECK(thermal_field_sigma(dev, 1e-12) == doctest::Approx(0.5 * s1).epsilon(1e-12));
  }
  SUBCASE("zero temperature silences both modes") {
    dev.temperature = 0.0;
    CHECK(thermal_field_sigma(dev, 1e-12) == 0.0);
    dev.noise_mode = NoiseMode::computed;
    CHECK(thermal_field_sigma(dev, 1e-12) == 0.0);
  }
  SUBCASE("rejects nonpositive dt") {
    CHECK_THROWS_AS(thermal_field_sigma(dev, 0.0), domain_error);
    CHECK_THROWS_AS(thermal_field_sigma(dev, -1e-12), domain_error);
  }
}

TEST_CASE("tmr ratio") {
  DeviceParams dev = defaults_calibrated();

  CHECK(tmr_ratio(dev, 0.0, 0.0) == doctest::Approx(0.8232636928289104).epsilon(1e-12));
  CHECK(tmr_ratio(dev, 300.0, 0.0) == doctest::Approx(0.6114479757605844).epsilon(1e-12));

  SUBCASE("halves exactly at v0, at any temperature and under override") {
    RngStream rng(5, 1);
    for (int i = 0; i < 100; ++i) {
      DeviceParams d = dev;
      d.v0 = 0.2 + rng.uniform();
      d.p0 = 0.2 + 0.6 * rng.uniform();
      if (i % 2) d.tmr_override = 0.5 + 3.0 * rng.uniform();
      const double t = 400.0 * rng.uniform();
      CHECK(tmr_ratio(d, t, d.v0) ==
            doctest::Approx(0.5 * tmr_ratio(d, t, 0.0)).epsilon(1e-14));
    }
  }
  SUBCASE("override replaces the zero-bias value but keeps roll-off") {
    dev.tmr_override = 2.0;
    CHECK(tmr_ratio(dev, 300.0, 0.0) == 2.0);
    CHECK(tmr_ratio(dev, 0.0, 0.0) == 2.0);
    CHECK(tmr_ratio(dev, 300.0, dev.v0) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("strictly decreasing in |v|") {
    CHECK(tmr_ratio(dev, 300.0, 0.4) < tmr_ratio(dev, 300.0, 0.2));
    CHECK(tmr_ratio(dev, 300.0, 0.2) < tmr_ratio(dev, 300.0, 0.0));
  }
  SUBCASE("rejects a polarization factor at or beyond unity") {
    dev.alpha_sp = -1e-2;  // grows P(T) far above 1
    CHECK_THROWS_AS(tmr_ratio(dev, 300.0, 0.0), domain_error);
  }
}

TEST_CASE("resistances") {
  DeviceParams dev = defaults_calibrated();
  const double r_p = resistance(dev, MtjState::P, 300.0, 0.0);
  CHECK(r_p == doctest::Approx(2469.135802469136).epsilon(1e-12));
  CHECK(resistance(dev, MtjState::P, 300.0, 2.0) == r_p);  // bias independent

  dev.tmr_override = 2.0;
  CHECK(resistance(dev, MtjState::AP, 300.0, 0.0) == doctest::Approx(3.0 * r_p).epsilon(1e-12));
  CHECK(resistance(dev, MtjState::AP, 300.0, 1e6) == doctest::Approx(r_p).epsilon(1e-6));

  SUBCASE("mid-switch interpolation hits the endpoints") {
    const double r_ap = resistance(dev, MtjState::AP, 300.0, 0.3);
    CHECK(mid_switch_resistance(dev, 1.0, 300.0, 0.3) == doctest::Approx(r_p).epsilon(1e-12));
    CHECK(mid_switch_resistance(dev, -1.0, 300.0, 0.3) == doctest::Approx(r_ap).epsilon(1e-12));
    const double r_mid = mid_switch_resistance(dev, 0.0, 300.0, 0.3);
    CHECK(r_mid == doctest::Approx(2.0 * r_p * r_ap / (r_p + r_ap)).epsilon(1e-12));
  }
}

TEST_CASE("fields") {
  const DeviceParams dev = defaults_calibrated();

  SUBCASE("anisotropy field") {
    const Vec3 h = anisotropy_field(dev, 0.0, 1.0);
    CHECK(h.z == doctest::Approx(1.1588002299627396e6).epsilon(1e-12));
    CHECK(anisotropy_field(dev, 0.0, 0.0).z == 0.0);
    CHECK(anisotropy_field(dev, 0.0, -0.25).z ==
          doctest::Approx(-anisotropy_field(dev, 0.0, 0.25).z).epsilon(1e-14));
  }
  SUBCASE("demag field") {
    const Vec3 h = demag_field(dev, {0.0, 0.0, 1.0});
    CHECK(h.z == doctest::Approx(-9.5e5).epsilon(1e-14));
    const Vec3 hp = demag_field(dev, {1.0, 0.0, 0.0});
    CHECK(hp.x == 0.0);
    CHECK(hp.z == 0.0);
  }
  SUBCASE("effective field composes the parts") {
    const Vec3 up = effective_field(dev, {0.0, 0.0, 1.0}, 0.0, {});
    CHECK(up.z == doctest::Approx(2.0880022996273963e5).epsilon(1e-12));
    CHECK(up.x == 0.0);

    const Vec3 inplane = effective_field(dev, {1.0, 0.0, 0.0}, 0.0, {});
    CHECK(norm(inplane) == 0.0);

    DeviceParams dv = dev;
    dv.xi = 200e-15;
    const double z0 = effective_field(dv, {0.0, 0.0, 1.0}, 0.0, {}).z;
    const double z1 = effective_field(dv, {0.0, 0.0, 1.0}, 0.3, {}).z;
    const double z2 = effective_field(dv, {0.0, 0.0, 1.0}, 0.6, {}).z;
    CHECK(z1 < z0);
    CHECK(z2 < z1);

    const Vec3 noise{100.0, -50.0, 25.0};
    const Vec3 with_noise = effective_field(dev, {0.0, 0.0, 1.0}, 0.0, noise);
    CHECK(with_noise.x == doctest::Approx(100.0));
    CHECK(with_noise.z == doctest::Approx(up.z + 25.0));
  }
}

TEST_CASE("device validation") {
  DeviceParams d;
  d.lx = -1.0;
  CHECK_THROWS_AS(d.validate(), config_error);
  d = DeviceParams{};
  d.p0 = 1.0;
  CHECK_THROWS_AS(d.validate(), config_error);
  d = DeviceParams{};
  d.tmr_override = 0.0;
  CHECK_THROWS_AS(d.validate(), config_error);
  d = DeviceParams{};
  d.temperature = -1.0;
  CHECK_THROWS_AS(d.validate(), config_error);
  CHECK_NOTHROW(DeviceParams{}.validate());
}
