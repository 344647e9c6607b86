#pragma once
// Bloch-wave spectral analysis of the linearized flow about a periodic
// profile, discretized by the Fourier-Hill method: linearize, conjugate by
// e^{i xi z}, expand coefficient functions in Fourier modes -N..N, and take
// the dense complex spectrum per Bloch parameter xi.

#include <bnov/wave.hpp>

#include <Eigen/Core>

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace bnov {

// Imaginary part of the amplitude-zero eigenvalue attached to mode n:
// lambda_{n,xi} = i omega(n, xi).
double omega(const ModelParams& p, int n, double xi);

// Where the amplitude-zero eigenvalues sit relative to each other. The two
// gaps close at isolated xi only through mode collisions; ordering_ok records
// that the only collision near the origin is the triple n in {-1, 0, 1}.
struct CollisionReport {
  double gap_m2_0;   // omega(0, xi) - omega(-2, xi)
  double gap_m1_p1;  // omega(1, xi) - omega(-1, xi)
  bool ordering_ok;
};
CollisionReport collision_report(const ModelParams& p, double xi);

// Dense Bloch matrix on modes -N..N. Throws TruncationTooSmall if N < wave.N.
Eigen::MatrixXcd assemble_bloch_matrix(const FourierWave& wave, double xi,
                                       int N);

struct BlochSample {
  double xi = 0.0;
  std::vector<std::complex<double>> eigenvalues;  // sorted by (imag, real)
  double max_real_part = 0.0;
  std::array<std::complex<double>, 3> critical_triple{};  // smallest |lambda|
};
BlochSample bloch_eigs(const FourierWave& wave, double xi, int N = 48);

// Max distance of the eigenvalue multiset from its image under
// lambda -> -conj(lambda); Hamiltonian-type symmetry of the exact spectrum.
double spectrum_symmetry_check(const BlochSample& sample);

// One BlochSample per entry of xis, in order. The parallel variant computes
// samples independently per xi and is bitwise identical to the serial one.
std::vector<BlochSample> sweep_xi_serial(const FourierWave& wave,
                                         std::span<const double> xis, int N);
std::vector<BlochSample> sweep_xi(const FourierWave& wave,
                                  std::span<const double> xis, int N);

}  // namespace bnov
