#pragma once
// Small-amplitude expansion of the periodic profile family bifurcating from
// the constant state:
//     w(z) = w0 + a cos z + a^2 (e1 + e2 cos 2z) + O(a^3)
//     c(a) = c0 + a^2 c2 + O(a^4)

#include <bnov/params.hpp>

#include <span>
#include <vector>

namespace bnov {

struct ExpansionCoeffs {
  double e1;
  double e2;
  double c2;
  double e3;  // 2 e1 - (c2 / c0) w0; mean-shift rate of the wave family
};
ExpansionCoeffs expansion_coeffs(const ModelParams& p);

// Throws AmplitudeTooLarge for |a| > 0.2; the expansion is asymptotic and the
// cap keeps its use inside the regime where the truncation error is small.
double wave_expansion(const ModelParams& p, double a, double z);
std::vector<double> wave_expansion(const ModelParams& p, double a,
                                   std::span<const double> z);
double speed_expansion(const ModelParams& p, double a);

// Basis of the slow subspace at amplitude a, sampled on a grid:
//   phi1 = cos z + a (e3 + 2 e2 cos 2z)
//   phi2 = sin z + 2 a e2 sin 2z
//   phi3 = 1
struct BasisFunctions {
  std::vector<double> phi1, phi2, phi3;
};
BasisFunctions basis_functions(const ModelParams& p, double a,
                               std::span<const double> z);

}  // namespace bnov
