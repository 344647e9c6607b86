#pragma once
// Modulational-instability index and the induced (k, b) parameter regions,
// plus the 3x3 reduced eigenvalue problem near the origin from which the
// index is derived: the critical cubic, its discriminant, and the closed-form
// small-(a, xi) expansion of that discriminant.

#include <bnov/params.hpp>

#include <Eigen/Core>

#include <complex>

namespace bnov {

// g(k, b) = A(x) b^2 + B(x) b + C(x) with x = k^2:
//   A = x^3 -  5x^2 -  2x +  6
//   B = -11x^3 + 3x^2 + 8x + 12
//   C = 22x^3 + 26x^2 + 10x + 6
double g_index(double k, double b);

enum class StabilityVerdict {
  ModulationallyUnstable,  // g < 0
  SpectrallyStable,        // g > 0 and k^2 < 3
  ModulationallyStable,    // g > 0 and k^2 >= 3
  Marginal,                // |g| below the relative rounding band
};
const char* verdict_name(StabilityVerdict v);

struct Classification {
  StabilityVerdict verdict;
  double g;
  double x;  // k^2
};
Classification classify(double k, double b);

// Reduced pencil (I_a, B) on the three-dimensional slow subspace at Bloch
// parameter xi and amplitude a; entries through O(a) and O(xi^2).
struct ReducedMatrices {
  Eigen::Matrix3cd I_a;
  Eigen::Matrix3cd B;
  double a = 0.0, xi = 0.0;
  double u = 0.0, v = 0.0, q = 0.0, beta = 0.0;
  double gamma1 = 0.0, gamma2 = 0.0;
  double e3 = 0.0, alpha = 0.0, w0 = 0.0;
};
ReducedMatrices assemble_reduced(const ModelParams& p, double a, double xi);

// Characteristic cubic of the reduced pencil in the scaled eigenvalue
// mu = lambda / (i xi):  H(mu) = d3 mu^3 - d2 mu^2 - d1 mu + d0.
// Throws DegenerateScaling at xi = 0. imag_defect records how far the
// computed coefficients are from real (exactly zero in exact arithmetic).
struct CriticalCubic {
  double d3, d2, d1, d0;
  double discriminant;  // 18 d3 d2 d1 d0 + d2^2 d1^2 + 4 d2^3 d0 + 4 d3 d1^3 - 27 d3^2 d0^2
  double imag_defect;
};
CriticalCubic critical_cubic(const ReducedMatrices& rm);

// Leading closed-form behavior of the discriminant:
// Delta(a, xi) = delta0_coeff xi^2 + lambda a^2 + O(a^2 (a^2 + xi^2)).
// Three real roots (stability) iff Delta > 0.
struct DeltaExpansion {
  double delta0_coeff;
  double lambda;
  double delta0(double xi) const { return delta0_coeff * xi * xi; }
  double predicted(double a, double xi) const {
    return delta0(xi) + lambda * a * a;
  }
};
DeltaExpansion delta_expansion(const ModelParams& p);

// Roots of g(., b) = 0 in b at fixed x = k^2, with the labeling
// b1 = (-B - sqrt(disc)) / (2A), b2 = (-B + sqrt(disc)) / (2A). When A
// degenerates the single root -C/B is reported in b1. "physical" means > 0.
struct RegionBoundary {
  double A, B, C;
  double disc;  // B^2 - 4 A C
  bool has_b1 = false, has_b2 = false;
  double b1 = 0.0, b2 = 0.0;
  bool b1_physical = false, b2_physical = false;
};
RegionBoundary region_boundary(double x);

// Root of 11x^4 + 90x^3 + 163x^2 - 120x - 96 in [1/2, 1]: the smallest
// x = k^2 at which the region discriminant 3 x^2 (that quartic) vanishes.
double threshold_x0();

// Shape of the unstable-b set at fixed x = k^2.
enum class RegionCase {
  AlwaysPositive,    // g > 0 for every b > 0
  UnstableAboveB1,   // g < 0 exactly for b > b1
  UnstableBetween,   // g < 0 exactly for b1 < b < b2
};
struct RegionCaseResult {
  RegionCase kind;
  double b1 = 0.0, b2 = 0.0;  // thresholds when applicable
};
RegionCaseResult region_case(double x);
const char* region_case_name(RegionCase c);

}  // namespace bnov
