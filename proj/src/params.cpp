#include <bnov/params.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <string>

namespace bnov {

namespace {

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw NonPositiveParameter(std::string(name) +
                               " must be finite and positive");
  }
}

// Shared domain guard for the potential family: phi must sit strictly inside
// the singular ring phi^2 = c.
void check_potential_domain(double b, double d, double c, double phi) {
  require_positive(b, "b");
  require_positive(d, "d");
  if (!std::isfinite(c) || c <= 0.0) {
    throw DomainError("speed c must be finite and positive");
  }
  if (!std::isfinite(phi) || phi * phi >= c) {
    throw DomainError("potential requires phi^2 < c");
  }
}

}  // namespace

void validate_params(const ModelParams& p) {
  require_positive(p.b, "b");
  require_positive(p.k, "k");
  require_positive(p.d, "d");
}

double c_min(double b, double d) {
  require_positive(b, "b");
  require_positive(d, "d");
  return (b + 1.0) * std::pow(b, -b / (b + 1.0)) * std::pow(d, 2.0 / (b + 1.0));
}

double potential(double b, double d, double c, double phi) {
  check_potential_domain(b, d, c, phi);
  // The integrand is even in s, so integrate over [0, |phi|] and restore the
  // sign; keeps the quadrature interval oriented.
  const double sign = phi < 0.0 ? -1.0 : 1.0;
  auto f = [=](double s) { return d * std::pow(c - s * s, -0.5 * b); };
  const double integral =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
          f, 0.0, std::abs(phi), 15, 1e-14);
  return sign * integral - 0.5 * phi * phi;
}

double potential_d1(double b, double d, double c, double phi) {
  check_potential_domain(b, d, c, phi);
  return d * std::pow(c - phi * phi, -0.5 * b) - phi;
}

double potential_d2(double b, double d, double c, double phi) {
  check_potential_domain(b, d, c, phi);
  return d * b * phi * std::pow(c - phi * phi, -0.5 * (b + 2.0)) - 1.0;
}

Equilibrium equilibrium(const ModelParams& p) {
  validate_params(p);
  const double bp1 = p.b + 1.0;
  const double k2 = p.k * p.k;
  const double w0 = std::pow(p.d, 1.0 / bp1) *
                    std::pow(p.b / (1.0 + k2), -p.b / (2.0 * bp1));
  const double c0 = (k2 + p.b + 1.0) / (k2 + 1.0) * w0 * w0;
  Equilibrium eq{w0, c0, c0 - bp1 * w0 * w0, c0 - w0 * w0};
  // (c0 - w0^2)^(b/2) w0 = d must close to rounding, else the parameters
  // overflow the floating-point range of the powers involved.
  const double defect = std::pow(eq.alpha_tilde, 0.5 * p.b) * w0 - p.d;
  if (!(std::abs(defect) <= 1e-10 * p.d)) {
    throw BifurcationInvalid("equilibrium defining relation failed to close");
  }
  return eq;
}

GeneralEquilibrium general_equilibrium(double b, double d, double c) {
  require_positive(b, "b");
  require_positive(d, "d");
  if (!std::isfinite(c) || c <= 0.0) {
    throw DomainError("speed c must be finite and positive");
  }
  if (!(c > c_min(b, d))) {
    throw NoMinimum("speed at or below the fold: V has no interior minimum");
  }
  // h(phi) = phi (c - phi^2)^(b/2) - d is negative at both ends of (0,
  // sqrt(c)) and positive at its single peak phi = sqrt(c / (b+1)); one root
  // on each side.
  auto h = [=](double phi) {
    return phi * std::pow(c - phi * phi, 0.5 * b) - d;
  };
  const double peak = std::sqrt(c / (b + 1.0));
  auto bisect = [&](double lo, double hi) {
    bool lo_pos = h(lo) > 0.0;
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
      const double mid = 0.5 * (lo + hi);
      if ((h(mid) > 0.0) == lo_pos) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };
  return {bisect(0.0, peak), bisect(peak, std::sqrt(c))};
}

}  // namespace bnov
