#include <bnov/asymptotics.hpp>

#include <cmath>

namespace bnov {

namespace {

void check_amplitude(double a) {
  if (!std::isfinite(a) || std::abs(a) > 0.2) {
    throw AmplitudeTooLarge(
        "expansion amplitude capped at |a| <= 0.2; beyond that the truncation "
        "error is no longer negligible");
  }
}

}  // namespace

ExpansionCoeffs expansion_coeffs(const ModelParams& p) {
  validate_params(p);
  const Equilibrium eq = equilibrium(p);
  const double b = p.b, k2 = p.k * p.k;
  const double bp1 = b + 1.0;
  const double dinv = std::pow(p.d, 1.0 / bp1);
  const double ratio = b / (1.0 + k2);
  ExpansionCoeffs out{};
  out.e1 = (-2.0 * (1.0 + k2) * (1.0 + k2) +
            (-4.0 - 6.0 * k2 + k2 * k2) * b +
            (-2.0 - 2.0 * k2 + k2 * k2) * b * b) *
           std::pow(ratio, -(2.0 + b) / (2.0 * bp1)) /
           (24.0 * bp1 * dinv * k2);
  out.e2 = ((2.0 + 2.0 * b) + (4.0 + 3.0 * b) * k2 + (2.0 + b) * k2 * k2) *
           std::pow(ratio, b / (2.0 * bp1)) / (12.0 * b * dinv * k2);
  out.c2 = ((10.0 + 8.0 * k2 - 2.0 * k2 * k2) +
            (20.0 + 12.0 * k2 + k2 * k2) * b +
            (10.0 + 4.0 * k2 + k2 * k2) * b * b) /
           (12.0 * b * bp1);
  out.e3 = 2.0 * out.e1 - (out.c2 / eq.c0) * eq.w0;
  return out;
}

double wave_expansion(const ModelParams& p, double a, double z) {
  check_amplitude(a);
  const Equilibrium eq = equilibrium(p);
  const ExpansionCoeffs ex = expansion_coeffs(p);
  return eq.w0 + a * std::cos(z) +
         a * a * (ex.e1 + ex.e2 * std::cos(2.0 * z));
}

std::vector<double> wave_expansion(const ModelParams& p, double a,
                                   std::span<const double> z) {
  check_amplitude(a);
  const Equilibrium eq = equilibrium(p);
  const ExpansionCoeffs ex = expansion_coeffs(p);
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    out[i] = eq.w0 + a * std::cos(z[i]) +
             a * a * (ex.e1 + ex.e2 * std::cos(2.0 * z[i]));
  }
  return out;
}

double speed_expansion(const ModelParams& p, double a) {
  check_amplitude(a);
  const Equilibrium eq = equilibrium(p);
  const ExpansionCoeffs ex = expansion_coeffs(p);
  return eq.c0 + a * a * ex.c2;
}

BasisFunctions basis_functions(const ModelParams& p, double a,
                               std::span<const double> z) {
  check_amplitude(a);
  const ExpansionCoeffs ex = expansion_coeffs(p);
  BasisFunctions out;
  out.phi1.resize(z.size());
  out.phi2.resize(z.size());
  out.phi3.assign(z.size(), 1.0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    out.phi1[i] = std::cos(z[i]) + a * (ex.e3 + 2.0 * ex.e2 * std::cos(2.0 * z[i]));
    out.phi2[i] = std::sin(z[i]) + 2.0 * a * ex.e2 * std::sin(2.0 * z[i]);
  }
  return out;
}

}  // namespace bnov
