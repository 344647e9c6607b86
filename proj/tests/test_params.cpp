#include <bnov/params.hpp>

#include "doctest.h"
#include "test_helpers.hpp"

#include <cmath>

using namespace bnov;
using testutil::ParamRng;

TEST_SUITE("params") {

TEST_CASE("validate_params rejects nonpositive and nonfinite input") {
  CHECK_NOTHROW(validate_params({3.0, 1.0, 1.0}));
  CHECK_THROWS_AS(validate_params({0.0, 1.0, 1.0}), NonPositiveParameter);
  CHECK_THROWS_AS(validate_params({3.0, -2.0, 1.0}), NonPositiveParameter);
  CHECK_THROWS_AS(validate_params({3.0, 1.0, 0.0}), NonPositiveParameter);
  CHECK_THROWS_AS(validate_params({std::nan(""), 1.0, 1.0}),
                  NonPositiveParameter);
}

TEST_CASE("c_min is exactly the fold height of the flux map") {
  // At c = c_min the peak of phi (c - phi^2)^(b/2) equals d.
  ParamRng rng;
  for (int trial = 0; trial < 25; ++trial) {
    const double b = rng.uniform(0.3, 6.0);
    const double d = rng.uniform(0.3, 3.0);
    const double c = c_min(b, d);
    const double peak_arg = std::sqrt(c / (b + 1.0));
    const double peak =
        peak_arg * std::pow(c - peak_arg * peak_arg, 0.5 * b);
    CHECK(testutil::rel_diff(peak, d) < 1e-12);
  }
}

TEST_CASE("potential matches the b=2 and b=3 closed forms") {
  const double d = 1.3, c = 2.1;
  for (double phi : testutil::linspace(-1.2, 1.2, 17)) {
    const double v2 = potential(2.0, d, c, phi);
    const double closed2 =
        d / std::sqrt(c) * std::atanh(phi / std::sqrt(c)) - 0.5 * phi * phi;
    CHECK(std::abs(v2 - closed2) < 1e-12);

    const double v3 = potential(3.0, d, c, phi);
    const double closed3 =
        d * phi / (c * std::sqrt(c - phi * phi)) - 0.5 * phi * phi;
    CHECK(std::abs(v3 - closed3) < 1e-12);
  }
}

TEST_CASE("potential derivatives agree with finite differences") {
  ParamRng rng;
  for (int trial = 0; trial < 10; ++trial) {
    const double b = rng.uniform(0.5, 5.0);
    const double d = rng.uniform(0.4, 2.0);
    const double c = rng.uniform(1.0, 4.0);
    const double phi = rng.uniform(-0.6, 0.6) * std::sqrt(c);
    const double h = 1e-5 * std::sqrt(c);
    const double fd1 =
        (potential(b, d, c, phi + h) - potential(b, d, c, phi - h)) /
        (2.0 * h);
    const double fd2 = (potential(b, d, c, phi + h) -
                        2.0 * potential(b, d, c, phi) +
                        potential(b, d, c, phi - h)) /
                       (h * h);
    CHECK(testutil::rel_diff(fd1, potential_d1(b, d, c, phi)) < 1e-7);
    CHECK(testutil::rel_diff(fd2, potential_d2(b, d, c, phi)) < 1e-5);
  }
}

TEST_CASE("potential domain errors") {
  CHECK_THROWS_AS(potential(2.0, 1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(potential(2.0, 1.0, 1.0, 1.5), DomainError);
  CHECK_THROWS_AS(potential(2.0, 1.0, -1.0, 0.1), DomainError);
  CHECK_THROWS_AS(potential(-2.0, 1.0, 1.0, 0.1), NonPositiveParameter);
  CHECK_THROWS_AS(potential_d1(2.0, 1.0, 1.0, -1.0), DomainError);
  CHECK_THROWS_AS(potential_d2(2.0, 1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("equilibrium satisfies its defining relations") {
  ParamRng rng;
  for (int trial = 0; trial < 25; ++trial) {
    const ModelParams p{rng.uniform(0.3, 6.0), rng.uniform(0.2, 4.0),
                        rng.uniform(0.3, 3.0)};
    const Equilibrium eq = equilibrium(p);
    const double k2 = p.k * p.k;

    CHECK(testutil::rel_diff(std::pow(eq.alpha_tilde, 0.5 * p.b) * eq.w0,
                             p.d) < 1e-12);
    CHECK(testutil::rel_diff(eq.alpha, -k2 * eq.alpha_tilde) < 1e-12);
    CHECK(eq.alpha_tilde > 0.0);
    CHECK(eq.alpha < 0.0);
    CHECK(eq.c0 > c_min(p.b, p.d));

    // The equilibrium is a center of the potential flow with stiffness k^2.
    CHECK(std::abs(potential_d1(p.b, p.d, eq.c0, eq.w0)) <
          1e-11 * std::max(1.0, eq.w0));
    CHECK(testutil::rel_diff(potential_d2(p.b, p.d, eq.c0, eq.w0), k2) <
          1e-10);
  }
}

TEST_CASE("equilibrium speed approaches the fold as k vanishes") {
  const ModelParams p{2.7, 1e-7, 1.4};
  const Equilibrium eq = equilibrium(p);
  CHECK(testutil::rel_diff(eq.c0, c_min(p.b, p.d)) < 1e-12);
}

TEST_CASE("general_equilibrium brackets the two critical points") {
  ParamRng rng;
  for (int trial = 0; trial < 20; ++trial) {
    const double b = rng.uniform(0.3, 6.0);
    const double d = rng.uniform(0.3, 3.0);
    const double c = c_min(b, d) * rng.uniform(1.02, 3.0);
    const GeneralEquilibrium ge = general_equilibrium(b, d, c);
    const double peak = std::sqrt(c / (b + 1.0));

    CHECK(0.0 < ge.saddle);
    CHECK(ge.saddle < peak);
    CHECK(peak < ge.center);
    CHECK(ge.center < std::sqrt(c));
    const double scale = std::max(1.0, std::sqrt(c));
    CHECK(std::abs(potential_d1(b, d, c, ge.saddle)) < 1e-9 * scale);
    CHECK(std::abs(potential_d1(b, d, c, ge.center)) < 1e-9 * scale);
    CHECK(potential_d2(b, d, c, ge.saddle) < 0.0);
    CHECK(potential_d2(b, d, c, ge.center) > 0.0);
  }
}

TEST_CASE("general_equilibrium refuses subcritical speeds") {
  CHECK_THROWS_AS(general_equilibrium(3.0, 1.0, c_min(3.0, 1.0) * 0.98),
                  NoMinimum);
  CHECK_THROWS_AS(general_equilibrium(3.0, 1.0, c_min(3.0, 1.0)), NoMinimum);
  CHECK_THROWS_AS(general_equilibrium(-1.0, 1.0, 2.0), NonPositiveParameter);
}

}  // TEST_SUITE
