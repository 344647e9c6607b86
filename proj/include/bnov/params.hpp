#pragma once
// Model parameters and the effective potential of the traveling-profile ODE.
//
// A profile w(z), 2pi-periodic in z = k x, solves
//     (w - k^2 w_zz) (c - w^2)^(b/2) = d
// and its unscaled (k = 0) phase plane is Newtonian with potential
//     V(phi) = int_0^phi d / (c - s^2)^(b/2) ds - phi^2 / 2,   phi^2 < c.

#include <bnov/errors.hpp>

namespace bnov {

struct ModelParams {
  double b;  // family exponent, > 0
  double k;  // wavenumber, > 0
  double d;  // profile flux constant, > 0
};

// Throws NonPositiveParameter unless b, k, d are all finite and positive.
void validate_params(const ModelParams& p);

// Smallest speed for which V has interior critical points.
double c_min(double b, double d);

double potential(double b, double d, double c, double phi);
double potential_d1(double b, double d, double c, double phi);
double potential_d2(double b, double d, double c, double phi);

// Bifurcation-point equilibrium of the scaled profile equation: the constant
// state w0 and speed c0 from which the 2pi-periodic family with wavenumber k
// branches off.
struct Equilibrium {
  double w0;
  double c0;
  double alpha;        // c0 - (1+b) w0^2, negative for k > 0
  double alpha_tilde;  // c0 - w0^2, positive
};
Equilibrium equilibrium(const ModelParams& p);

// Critical points of V for an arbitrary supercritical speed c > c_min(b, d).
// Throws NoMinimum when c <= c_min.
struct GeneralEquilibrium {
  double saddle;  // local maximum of V
  double center;  // local minimum of V; bounded orbits encircle it
};
GeneralEquilibrium general_equilibrium(double b, double d, double c);

}  // namespace bnov
