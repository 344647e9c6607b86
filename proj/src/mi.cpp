#include <bnov/mi.hpp>

#include <bnov/asymptotics.hpp>

#include <array>
#include <cmath>

namespace bnov {

namespace {

double poly_A(double x) { return 6.0 + x * (-2.0 + x * (-5.0 + x)); }
double poly_B(double x) { return 12.0 + x * (8.0 + x * (3.0 - 11.0 * x)); }
double poly_C(double x) { return 6.0 + x * (10.0 + x * (26.0 + 22.0 * x)); }
double quartic(double x) {
  return -96.0 + x * (-120.0 + x * (163.0 + x * (90.0 + 11.0 * x)));
}

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw NonPositiveParameter(std::string(name) +
                               " must be finite and positive");
  }
}

// Degree-3 complex polynomial arithmetic for the 3x3 determinant expansion.
using Poly = std::array<std::complex<double>, 4>;

Poly mul(const Poly& f, const Poly& g) {
  Poly out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j + i < 4; ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

Poly sub(const Poly& f, const Poly& g) {
  Poly out;
  for (int i = 0; i < 4; ++i) out[i] = f[i] - g[i];
  return out;
}

Poly add(const Poly& f, const Poly& g) {
  Poly out;
  for (int i = 0; i < 4; ++i) out[i] = f[i] + g[i];
  return out;
}

}  // namespace

double g_index(double k, double b) {
  require_positive(k, "k");
  if (!std::isfinite(b) || b < 0.0) {
    throw NonPositiveParameter("b must be finite and nonnegative");
  }
  const double x = k * k;
  return (poly_A(x) * b + poly_B(x)) * b + poly_C(x);
}

const char* verdict_name(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::ModulationallyUnstable:
      return "ModulationallyUnstable";
    case StabilityVerdict::SpectrallyStable:
      return "SpectrallyStable";
    case StabilityVerdict::ModulationallyStable:
      return "ModulationallyStable";
    case StabilityVerdict::Marginal:
      return "Marginal";
  }
  return "Unknown";
}

Classification classify(double k, double b) {
  const double x = k * k;
  const double g = g_index(k, b);
  // The marginal band is relative to the size of the terms that cancel.
  const double scale =
      std::abs(poly_A(x)) * b * b + std::abs(poly_B(x)) * b +
      std::abs(poly_C(x));
  StabilityVerdict v;
  if (std::abs(g) <= 1e-12 * scale) {
    v = StabilityVerdict::Marginal;
  } else if (g < 0.0) {
    v = StabilityVerdict::ModulationallyUnstable;
  } else if (x < 3.0) {
    v = StabilityVerdict::SpectrallyStable;
  } else {
    v = StabilityVerdict::ModulationallyStable;
  }
  return {v, g, x};
}

ReducedMatrices assemble_reduced(const ModelParams& p, double a, double xi) {
  validate_params(p);
  const Equilibrium eq = equilibrium(p);
  const ExpansionCoeffs ex = expansion_coeffs(p);
  const double k = p.k, b = p.b;
  const double k2 = k * k;
  const double al = eq.alpha;
  const double m1 = 1.0 / (k2 + 1.0);
  const double y1 = -2.0 * k2 / ((k2 + 1.0) * (k2 + 1.0));

  ReducedMatrices rm;
  rm.a = a;
  rm.xi = xi;
  rm.e3 = ex.e3;
  rm.alpha = al;
  rm.w0 = eq.w0;
  rm.u = -2.0 * k * al * m1;
  rm.v = k * al;
  rm.beta = 2.0 * k * eq.w0 * m1 * (k2 + 1.0 + b);
  rm.q = k * al * (-3.0 * m1 + 2.0 * y1);
  rm.gamma1 = 2.0 * k * al * ex.e3 + 2.0 * k * y1 * eq.w0 * (k2 + 1.0 + b) -
              k * eq.w0 * m1 * (b * k2 + 2.0 + 2.0 * b);
  rm.gamma2 = k * ex.e3 * al + k * eq.w0 * (b * k2 - 6.0 * k2 - 2.0 - 2.0 * b) / 2.0;

  rm.I_a = Eigen::Matrix3cd::Identity();
  rm.I_a(0, 2) = 2.0 * a * rm.e3;
  rm.I_a(2, 0) = a * rm.e3;

  const std::complex<double> I(0.0, 1.0);
  rm.B = Eigen::Matrix3cd::Zero();
  rm.B(0, 0) = I * xi * rm.u;
  rm.B(1, 1) = I * xi * rm.u;
  rm.B(2, 2) = I * xi * rm.v;
  rm.B(1, 2) = a * rm.beta;
  rm.B(0, 2) = a * I * xi * rm.gamma1;
  rm.B(2, 0) = a * I * xi * rm.gamma2;
  rm.B(0, 1) = xi * xi * rm.q;
  rm.B(1, 0) = -xi * xi * rm.q;
  return rm;
}

CriticalCubic critical_cubic(const ReducedMatrices& rm) {
  if (rm.xi == 0.0) {
    throw DegenerateScaling(
        "critical cubic is defined through mu = lambda / (i xi); xi must be "
        "nonzero");
  }
  const std::complex<double> I(0.0, 1.0);
  const std::complex<double> s = I * rm.xi;  // lambda = s * mu

  // Entries of B - s mu I_a as degree-1 polynomials in mu.
  Poly M[3][3];
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      M[r][c] = Poly{rm.B(r, c), -s * rm.I_a(r, c), 0.0, 0.0};
    }
  }
  const Poly det = add(
      sub(mul(M[0][0], sub(mul(M[1][1], M[2][2]), mul(M[1][2], M[2][1]))),
          mul(M[0][1], sub(mul(M[1][0], M[2][2]), mul(M[1][2], M[2][0])))),
      mul(M[0][2], sub(mul(M[1][0], M[2][1]), mul(M[1][1], M[2][0]))));

  // H(mu) = -det / s^3 has real coefficients in exact arithmetic.
  const std::complex<double> scale = -1.0 / (s * s * s);
  std::array<std::complex<double>, 4> h;
  double mag = 0.0;
  double defect = 0.0;
  for (int i = 0; i < 4; ++i) {
    h[i] = det[i] * scale;
    mag = std::max(mag, std::abs(h[i]));
  }
  for (int i = 0; i < 4; ++i) defect = std::max(defect, std::abs(h[i].imag()));

  CriticalCubic out{};
  out.d3 = h[3].real();
  out.d2 = -h[2].real();
  out.d1 = -h[1].real();
  out.d0 = h[0].real();
  out.imag_defect = mag > 0.0 ? defect / mag : defect;
  out.discriminant = 18.0 * out.d3 * out.d2 * out.d1 * out.d0 +
                     out.d2 * out.d2 * out.d1 * out.d1 +
                     4.0 * out.d2 * out.d2 * out.d2 * out.d0 +
                     4.0 * out.d3 * out.d1 * out.d1 * out.d1 -
                     27.0 * out.d3 * out.d3 * out.d0 * out.d0;
  return out;
}

DeltaExpansion delta_expansion(const ModelParams& p) {
  validate_params(p);
  const double k = p.k, b = p.b, d = p.d;
  const double k2 = k * k;
  const double bp1 = 1.0 + b;
  DeltaExpansion out{};
  out.delta0_coeff = 4.0 * std::pow(b, 6.0 / bp1) * std::pow(d, 12.0 / bp1) *
                     std::pow(k, 18) * std::pow(k2 + 3.0, 4) *
                     std::pow(7.0 * k2 + 3.0, 2) /
                     std::pow(k2 + 1.0, (14.0 + 8.0 * b) / bp1);
  out.lambda = 2.0 * std::pow(b, (4.0 - b) / bp1) * std::pow(d, 10.0 / bp1) *
               std::pow(k, 14) * std::pow(k2 + 3.0, 3) * (7.0 * k2 + 3.0) /
               (3.0 * std::pow(k2 + 1.0, (11.0 + 6.0 * b) / bp1)) *
               g_index(k, b);
  return out;
}

RegionBoundary region_boundary(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw NonPositiveParameter("x = k^2 must be finite and positive");
  }
  RegionBoundary out{};
  out.A = poly_A(x);
  out.B = poly_B(x);
  out.C = poly_C(x);
  out.disc = out.B * out.B - 4.0 * out.A * out.C;
  // Near the cubic's zero the quadratic degenerates; fall back to the exact
  // linear root there.
  const double a_scale = 1.0 + std::abs(x) * std::abs(x) * std::abs(x);
  if (std::abs(out.A) <= 1e-12 * a_scale) {
    out.has_b1 = true;
    out.b1 = -out.C / out.B;
    out.b1_physical = out.b1 > 0.0;
    return out;
  }
  if (out.disc < 0.0) return out;
  const double root = std::sqrt(out.disc);
  out.has_b1 = out.has_b2 = true;
  out.b1 = (-out.B - root) / (2.0 * out.A);
  out.b2 = (-out.B + root) / (2.0 * out.A);
  out.b1_physical = out.b1 > 0.0;
  out.b2_physical = out.b2 > 0.0;
  return out;
}

double threshold_x0() {
  double lo = 0.5, hi = 1.0;
  // quartic(0.5) < 0 < quartic(1); bisect to absolute width 1e-12.
  bool lo_pos = quartic(lo) > 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((quartic(mid) > 0.0) == lo_pos) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

RegionCaseResult region_case(double x) {
  const RegionBoundary rb = region_boundary(x);
  RegionCaseResult out{RegionCase::AlwaysPositive, 0.0, 0.0};
  if (rb.has_b1 && !rb.has_b2) {
    // Linear fallback at the cubic's zero; g slopes downward there.
    if (rb.b1_physical && rb.B < 0.0) {
      out = {RegionCase::UnstableAboveB1, rb.b1, 0.0};
    }
    return out;
  }
  if (!rb.has_b1) return out;
  if (rb.A < 0.0) {
    // Downward parabola in b with one positive root: unstable beyond it.
    const double pos = rb.b1_physical ? rb.b1 : rb.b2;
    if (rb.b1_physical || rb.b2_physical) {
      out = {RegionCase::UnstableAboveB1, pos, 0.0};
    }
    return out;
  }
  if (rb.b1_physical && rb.b2_physical) {
    out = {RegionCase::UnstableBetween, rb.b1, rb.b2};
  }
  return out;
}

const char* region_case_name(RegionCase c) {
  switch (c) {
    case RegionCase::AlwaysPositive:
      return "index positive for every b > 0";
    case RegionCase::UnstableAboveB1:
      return "index negative exactly for b > b1";
    case RegionCase::UnstableBetween:
      return "index negative exactly for b1 < b < b2";
  }
  return "unknown";
}

}  // namespace bnov
