#pragma once
// Fully nonlinear periodic profiles in a truncated cosine basis, refined by a
// damped Newton iteration with analytic Jacobian.

#include <bnov/asymptotics.hpp>

#include <span>
#include <string>
#include <vector>

namespace bnov {

// Even 2pi-periodic profile w(z) = sum_{m=0}^{N} coeffs[m] cos(m z) with
// speed c. coeffs[1] == a exactly: the first harmonic pins the amplitude
// parametrization. Validity: max w^2 < c and min (w - k^2 w_zz) > 0.
struct FourierWave {
  ModelParams params{};
  double a = 0.0;
  int N = 32;  // highest retained cosine mode, >= 8
  std::vector<double> coeffs;
  double c = 0.0;
  double residual_norm = 0.0;  // sup of profile_residual at the solution
};

// Evaluates sum coeffs[m] * d^order/dz^order cos(m z).
double eval_cosine_series(std::span<const double> coeffs, double z,
                          int order = 0);

// Solves the collocated profile equation for (coeffs[0], coeffs[2..N], c)
// starting from the small-amplitude expansion. Precondition |a| <= 0.3.
// Throws NoConvergence or ValidityViolated on failure.
FourierWave newton_refine(const ModelParams& p, double a, int N = 32,
                          double tol = 1e-12);

// (w - k^2 w_zz)(c - w^2)^(b/2) - d at 2(N+1) uniform points of [0, pi].
std::vector<double> profile_residual(const FourierWave& wave);

// Exact term-by-term derivatives on a 2(N+1)-point uniform grid of [0, 2pi).
struct ProfileDerivatives {
  std::vector<double> z, w, wz, wzz, wzzz;
};
ProfileDerivatives spectral_derivatives(const FourierWave& wave);

std::string wave_to_json(const FourierWave& wave);
FourierWave wave_from_json(const std::string& text);

}  // namespace bnov
