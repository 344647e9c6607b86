#include <bnov/wave.hpp>

#include "doctest.h"
#include "test_helpers.hpp"

#include <cmath>
#include <numbers>

using namespace bnov;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("wave") {

TEST_CASE("newton_refine converges to spectral accuracy at a=0.05") {
  struct Point {
    ModelParams p;
    double c_expected;
  };
  // Converged speeds pinned from an independent implementation of the same
  // collocation problem.
  const Point points[] = {
      {{3.0, 1.0, 1.0}, 1.848842057576},
      {{3.0, 2.0, 1.0}, 2.358177076371},
      {{5.0, 1.5, 1.0}, 1.778983403800},
      {{2.0, 2.5, 1.0}, 3.029976426684},
  };
  for (const Point& pt : points) {
    const FourierWave wave = newton_refine(pt.p, 0.05, 32);
    CHECK(wave.residual_norm <= 1e-12);
    CHECK(wave.coeffs[1] == 0.05);
    CHECK(std::abs(wave.c - pt.c_expected) < 1e-9);

    // Validity bounds hold strictly on a fine grid.
    const double k2 = pt.p.k * pt.p.k;
    for (int i = 0; i <= 4 * wave.N; ++i) {
      const double z = kPi * i / (4 * wave.N);
      const double w = eval_cosine_series(wave.coeffs, z, 0);
      const double wzz = eval_cosine_series(wave.coeffs, z, 2);
      CHECK(wave.c - w * w > 0.0);
      CHECK(w - k2 * wzz > 0.0);
    }
  }
}

TEST_CASE("newton solution approaches the expansion at fourth order") {
  const ModelParams p{3.0, 1.0, 1.0};
  const Equilibrium eq = equilibrium(p);
  const ExpansionCoeffs ex = expansion_coeffs(p);
  double err_c[3], err_w0[3], err_w2[3];
  const double amps[3] = {0.05, 0.025, 0.0125};
  for (int i = 0; i < 3; ++i) {
    const double a = amps[i];
    const FourierWave wave = newton_refine(p, a, 32, 1e-13);
    err_c[i] = std::abs(wave.c - (eq.c0 + a * a * ex.c2));
    err_w0[i] = std::abs(wave.coeffs[0] - (eq.w0 + a * a * ex.e1));
    err_w2[i] = std::abs(wave.coeffs[2] - a * a * ex.e2);
  }
  // Differences against the truncated expansion are O(a^4): halving the
  // amplitude divides them by ~16.
  for (int i = 0; i < 2; ++i) {
    CHECK(err_c[i] / err_c[i + 1] > 12.0);
    CHECK(err_c[i] / err_c[i + 1] < 20.0);
    CHECK(err_w0[i] / err_w0[i + 1] > 12.0);
    CHECK(err_w0[i] / err_w0[i + 1] < 20.0);
    CHECK(err_w2[i] / err_w2[i + 1] > 12.0);
    CHECK(err_w2[i] / err_w2[i + 1] < 20.0);
  }
}

TEST_CASE("amplitude zero reproduces the equilibrium exactly") {
  const ModelParams p{2.3, 1.7, 0.8};
  const Equilibrium eq = equilibrium(p);
  const FourierWave wave = newton_refine(p, 0.0, 16);
  CHECK(testutil::rel_diff(wave.c, eq.c0) < 1e-14);
  CHECK(testutil::rel_diff(wave.coeffs[0], eq.w0) < 1e-14);
  for (int m = 1; m <= wave.N; ++m) CHECK(std::abs(wave.coeffs[m]) < 1e-14);
  CHECK(wave.residual_norm < 1e-13);
}

TEST_CASE("profile_residual matches the stored norm") {
  const ModelParams p{2.0, 1.5, 1.0};
  const FourierWave wave = newton_refine(p, 0.04, 24);
  const std::vector<double> r = profile_residual(wave);
  CHECK(int(r.size()) == 2 * (wave.N + 1));
  double sup = 0.0;
  for (double v : r) sup = std::max(sup, std::abs(v));
  CHECK(sup == wave.residual_norm);
  CHECK(sup <= 1e-12);
}

TEST_CASE("spectral derivatives are exact for pure harmonics") {
  FourierWave wave;
  wave.params = {3.0, 1.0, 1.0};
  wave.N = 8;
  wave.coeffs.assign(wave.N + 1, 0.0);
  wave.coeffs[1] = 0.3;
  wave.c = 2.0;
  const ProfileDerivatives der = spectral_derivatives(wave);
  CHECK(int(der.z.size()) == 2 * (wave.N + 1));
  for (std::size_t i = 0; i < der.z.size(); ++i) {
    const double z = der.z[i];
    CHECK(std::abs(der.w[i] - 0.3 * std::cos(z)) < 1e-14);
    CHECK(std::abs(der.wz[i] + 0.3 * std::sin(z)) < 1e-14);
    CHECK(std::abs(der.wzz[i] + 0.3 * std::cos(z)) < 1e-14);
    CHECK(std::abs(der.wzzz[i] - 0.3 * std::sin(z)) < 1e-14);
  }
}

TEST_CASE("grid mean recovers the zeroth coefficient") {
  const ModelParams p{3.0, 1.0, 1.0};
  const FourierWave wave = newton_refine(p, 0.05, 32);
  const ProfileDerivatives der = spectral_derivatives(wave);
  double mean = 0.0;
  for (double v : der.w) mean += v;
  mean /= double(der.w.size());
  CHECK(std::abs(mean - wave.coeffs[0]) < 1e-13);
}

TEST_CASE("json round trip is lossless and deterministic") {
  const ModelParams p{2.0, 2.5, 1.0};
  const FourierWave wave = newton_refine(p, 0.05, 32);
  const std::string text = wave_to_json(wave);
  const FourierWave back = wave_from_json(text);
  CHECK(back.params.b == wave.params.b);
  CHECK(back.params.k == wave.params.k);
  CHECK(back.params.d == wave.params.d);
  CHECK(back.a == wave.a);
  CHECK(back.N == wave.N);
  CHECK(back.c == wave.c);
  CHECK(back.coeffs == wave.coeffs);
  CHECK(back.residual_norm == wave.residual_norm);
  CHECK(wave_to_json(back) == text);
}

TEST_CASE("json rejects malformed input") {
  CHECK_THROWS_AS(wave_from_json("not json"), DomainError);
  CHECK_THROWS_AS(wave_from_json("{\"schema\":2}"), DomainError);
  CHECK_THROWS_AS(wave_from_json("{\"schema\":1,\"b\":3}"), DomainError);
}

TEST_CASE("solver preconditions") {
  const ModelParams p{3.0, 1.0, 1.0};
  CHECK_THROWS_AS(newton_refine(p, 0.35, 32), AmplitudeTooLarge);
  CHECK_THROWS_AS(newton_refine(p, 0.05, 4), DomainError);
  CHECK_THROWS_AS(newton_refine(p, 0.05, 32, 1e-15), DomainError);
  CHECK_THROWS_AS(newton_refine({0.0, 1.0, 1.0}, 0.05, 32),
                  NonPositiveParameter);
}

TEST_CASE("under-resolved truncation is reported, not hidden") {
  // At N=8 the collocation system is solvable but the off-grid residual
  // floors at the truncation error, far above tol.
  const ModelParams p{3.0, 1.0, 1.0};
  CHECK_THROWS_AS(newton_refine(p, 0.2, 8, 1e-12), NoConvergence);
}

}  // TEST_SUITE
