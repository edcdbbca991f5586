#include <cmath>

#include "doctest.h"

#include "cramsim/constants.hpp"
#include "cramsim/errors.hpp"
#include "cramsim/initial_angle.hpp"
#include "cramsim/rng.hpp"

using namespace cramsim;

TEST_CASE("sampler rejects nonpositive stability factors") {
  CHECK_THROWS_AS(InitialAngleSampler(0.0), domain_error);
  CHECK_THROWS_AS(InitialAngleSampler(-3.0), domain_error);
}

TEST_CASE("support is [0, pi/2] and the map is monotone") {
  const InitialAngleSampler s(45.7);
  CHECK(s.theta_from_uniform(0.0) == 0.0);
  CHECK(s.theta_from_uniform(1.0 - 1e-16) <= consts::pi / 2.0);

  double prev = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double th = s.theta_from_uniform(i / 1000.0 * (1.0 - 1e-12));
    CHECK(th >= prev);
    CHECK(th >= 0.0);
    CHECK(th <= consts::pi / 2.0);
    prev = th;
  }
}

TEST_CASE("cdf endpoints and monotonicity") {
  const InitialAngleSampler s(30.0);
  CHECK(s.cdf(0.0) == 0.0);
  CHECK(s.cdf(consts::pi / 2.0) == doctest::Approx(1.0).epsilon(1e-12));
  double prev = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double c = s.cdf(i / 200.0 * consts::pi / 2.0);
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("tail mass above 3/sqrt(delta) stays below two percent") {
  for (double delta : {30.0, 45.7, 60.0, 100.0}) {
    const InitialAngleSampler s(delta);
    const double tail = 1.0 - s.cdf(3.0 / std::sqrt(delta));
    CHECK(tail < 0.02);
    CHECK(tail > 0.0);  // the distribution does reach past the mode
  }
}

TEST_CASE("sampled sin^2(theta) matches the quadrature moment") {
  // Expected values from adaptive quadrature of
  //   E[sin^2] = int sin^2 sin e^(-d sin^2) / int sin e^(-d sin^2), [0, pi/2].
  struct Case {
    double delta, expect;
  };
  for (const Case c : {Case{30.0, 0.033942032019418276},
                       Case{45.7, 0.02213552971255938},
                       Case{60.0, 0.01681173092063882}}) {
    const InitialAngleSampler s(c.delta);
    RngStream rng(1234, static_cast<uint64_t>(c.delta * 10));
    const int n = 100000;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double sin_th = std::sin(s.sample(rng));
      acc += sin_th * sin_th;
    }
    CHECK(acc / n == doctest::Approx(c.expect).epsilon(0.03));
  }
}

TEST_CASE("sampling is reproducible and the cache returns the same law") {
  RngStream a(99, 0);
  RngStream b(99, 0);
  const InitialAngleSampler s(45.7);
  for (int i = 0; i < 32; ++i) {
    const double direct = s.sample(a);
    const double cached = sample_initial_angle(45.7, b);
    CHECK(direct == cached);
  }
}
