#include <bnov/bloch.hpp>

#include <bnov/scan.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bnov {

namespace {

constexpr double kPi = std::numbers::pi;

// Coefficient-function Fourier transform on the dealiased product grid.
// M = 4(N+1) samples hold every mode of a product of two series truncated at
// wave.N <= N without aliasing error.
std::vector<std::complex<double>> dft(const std::vector<double>& f) {
  const int M = int(f.size());
  std::vector<std::complex<double>> roots(M);
  for (int r = 0; r < M; ++r) {
    roots[r] = std::polar(1.0, -2.0 * kPi * r / M);
  }
  std::vector<std::complex<double>> out(M);
  for (int j = 0; j < M; ++j) {
    std::complex<double> acc = 0.0;
    for (int m = 0; m < M; ++m) {
      acc += f[m] * roots[(long(j) * m) % M];
    }
    out[j] = acc / double(M);
  }
  return out;
}

std::complex<double> mode(const std::vector<std::complex<double>>& fh,
                          int j) {
  const int M = int(fh.size());
  return fh[((j % M) + M) % M];
}

bool imag_less(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.imag() != b.imag()) return a.imag() < b.imag();
  return a.real() < b.real();
}

}  // namespace

double omega(const ModelParams& p, int n, double xi) {
  const Equilibrium eq = equilibrium(p);
  const double k2 = p.k * p.k;
  const double nu = n + xi;
  return nu * (nu * nu - 1.0) * p.k * k2 * eq.alpha_tilde /
         (1.0 + k2 * nu * nu);
}

CollisionReport collision_report(const ModelParams& p, double xi) {
  validate_params(p);
  auto om = [&](int n) { return omega(p, n, xi); };
  CollisionReport rep{};
  rep.gap_m2_0 = om(0) - om(-2);
  rep.gap_m1_p1 = om(1) - om(-1);
  const double tri_min = std::min({om(-1), om(0), om(1)});
  const double tri_max = std::max({om(-1), om(0), om(1)});
  bool ok = rep.gap_m1_p1 >= 0.0;
  ok = ok && om(-2) < tri_min && om(2) > tri_max;
  // Tails must spread monotonically away from the origin triple.
  for (int n = 2; n < 7 && ok; ++n) {
    ok = om(n + 1) > om(n) && om(-n - 1) < om(-n);
  }
  rep.ordering_ok = ok;
  return rep;
}

Eigen::MatrixXcd assemble_bloch_matrix(const FourierWave& wave, double xi,
                                       int N) {
  validate_params(wave.params);
  if (int(wave.coeffs.size()) != wave.N + 1) {
    throw DomainError("coeffs size must be N + 1");
  }
  if (N < wave.N) {
    throw TruncationTooSmall(
        "Bloch truncation N must be at least the wave truncation");
  }
  const double k = wave.params.k;
  const double k2 = k * k;
  const double b = wave.params.b;
  const double c = wave.c;

  const int M = 4 * (N + 1);
  std::vector<double> w(M), wz(M), wzz(M), wzzz(M);
  for (int i = 0; i < M; ++i) {
    const double z = 2.0 * kPi * i / M;
    w[i] = eval_cosine_series(wave.coeffs, z, 0);
    wz[i] = eval_cosine_series(wave.coeffs, z, 1);
    wzz[i] = eval_cosine_series(wave.coeffs, z, 2);
    wzzz[i] = eval_cosine_series(wave.coeffs, z, 3);
  }
  std::vector<double> w2(M), wwz(M), wzwzz(M), wwzz(M), wwzzz(M);
  for (int i = 0; i < M; ++i) {
    w2[i] = w[i] * w[i];
    wwz[i] = w[i] * wz[i];
    wzwzz[i] = wz[i] * wzz[i];
    wwzz[i] = w[i] * wzz[i];
    wwzzz[i] = w[i] * wzzz[i];
  }
  const auto f_w2 = dft(w2);
  const auto f_wwz = dft(wwz);
  const auto f_wzwzz = dft(wzwzz);
  const auto f_wwzz = dft(wwzz);
  const auto f_wwzzz = dft(wwzzz);

  const int dim = 2 * N + 1;
  Eigen::MatrixXcd P(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const int n = r - N;
    const double row_scale = k / (1.0 + k2 * (n + xi) * (n + xi));
    for (int s = 0; s < dim; ++s) {
      const int m = s - N;
      const std::complex<double> D(0.0, m + xi);
      const std::complex<double> D2 = D * D;
      const std::complex<double> D3 = D2 * D;
      const int j = n - m;
      std::complex<double> T = 0.0;
      if (n == m) T += c * D - c * k2 * D3;
      T += -2.0 * (1.0 + b) * mode(f_wwz, j) - (1.0 + b) * mode(f_w2, j) * D;
      T += b * k2 * (mode(f_wzwzz, j) + mode(f_wwzz, j) * D +
                     mode(f_wwz, j) * D2);
      T += k2 * (mode(f_w2, j) * D3 + 2.0 * mode(f_wwzzz, j));
      P(r, s) = row_scale * T;
    }
  }
  return P;
}

BlochSample bloch_eigs(const FourierWave& wave, double xi, int N) {
  const Eigen::MatrixXcd P = assemble_bloch_matrix(wave, xi, N);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(P, false);
  if (solver.info() != Eigen::Success) {
    throw EigensolverFailure("dense complex eigensolver did not converge");
  }
  BlochSample sample;
  sample.xi = xi;
  const auto& ev = solver.eigenvalues();
  sample.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(sample.eigenvalues.begin(), sample.eigenvalues.end(), imag_less);
  sample.max_real_part = -std::numeric_limits<double>::infinity();
  for (const auto& lambda : sample.eigenvalues) {
    sample.max_real_part = std::max(sample.max_real_part, lambda.real());
  }
  std::vector<std::complex<double>> by_mag = sample.eigenvalues;
  std::partial_sort(by_mag.begin(), by_mag.begin() + 3, by_mag.end(),
                    [](const std::complex<double>& a,
                       const std::complex<double>& b) {
                      const double ma = std::abs(a), mb = std::abs(b);
                      if (ma != mb) return ma < mb;
                      return imag_less(a, b);
                    });
  sample.critical_triple = {by_mag[0], by_mag[1], by_mag[2]};
  return sample;
}

double spectrum_symmetry_check(const BlochSample& sample) {
  const auto& ev = sample.eigenvalues;
  const std::size_t n = ev.size();
  std::vector<char> used(n, 0);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> target = -std::conj(ev[i]);
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const double dist = std::abs(ev[j] - target);
      if (dist < best) {
        best = dist;
        best_j = j;
      }
    }
    used[best_j] = 1;
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<BlochSample> sweep_xi_serial(const FourierWave& wave,
                                         std::span<const double> xis, int N) {
  std::vector<BlochSample> out(xis.size());
  for (std::size_t i = 0; i < xis.size(); ++i) {
    out[i] = bloch_eigs(wave, xis[i], N);
  }
  return out;
}

std::vector<BlochSample> sweep_xi(const FourierWave& wave,
                                  std::span<const double> xis, int N) {
  std::vector<BlochSample> out(xis.size());
  std::exception_ptr error;
  const long total = long(xis.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
#endif
  for (long i = 0; i < total; ++i) {
    try {
      out[i] = bloch_eigs(wave, xis[i], N);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (!error) error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace bnov
