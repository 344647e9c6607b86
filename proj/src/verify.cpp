#include <bnov/verify.hpp>

#include <bnov/bloch.hpp>
#include <bnov/mi.hpp>
#include <bnov/scan.hpp>
#include <bnov/wave.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace bnov {

namespace {

constexpr double kPi = std::numbers::pi;

// Sup-norm of the profile-equation residual of the truncated expansion on a
// 256-point period grid. Halving a must divide it by about 2^3: the first
// uncancelled term is cubic.
double expansion_residual(const ModelParams& p, double a) {
  const Equilibrium eq = equilibrium(p);
  const ExpansionCoeffs ex = expansion_coeffs(p);
  const double c = speed_expansion(p, a);
  const double k2 = p.k * p.k;
  double worst = 0.0;
  for (int i = 0; i < 256; ++i) {
    const double z = 2.0 * kPi * i / 256.0;
    const double w = eq.w0 + a * std::cos(z) +
                     a * a * (ex.e1 + ex.e2 * std::cos(2.0 * z));
    const double wzz = -a * std::cos(z) - 4.0 * a * a * ex.e2 * std::cos(2.0 * z);
    const double F =
        (w - k2 * wzz) * std::pow(c - w * w, 0.5 * p.b) - p.d;
    worst = std::max(worst, std::abs(F));
  }
  return worst;
}

std::array<double, 3> triple_slopes(const FourierWave& wave, double xi,
                                    int N) {
  const BlochSample s = bloch_eigs(wave, xi, N);
  std::array<double, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = s.critical_triple[i].imag() / xi;
  std::sort(out.begin(), out.end());
  return out;
}

void push(VerifyReport& rep, std::string name, double measured,
          double expected, double tol, std::string note = "") {
  const bool pass = std::abs(measured - expected) <= tol;
  rep.all_pass = rep.all_pass && pass;
  rep.rows.push_back(
      {std::move(name), measured, expected, tol, pass, std::move(note)});
}

}  // namespace

VerifyReport run_verify(const ModelParams& p, double a) {
  validate_params(p);
  VerifyReport rep;

  // 1. Residual decay order of the small-amplitude expansion.
  {
    const std::array<double, 4> ladder{0.0025, 0.005, 0.01, 0.02};
    std::array<double, 4> R{};
    for (std::size_t i = 0; i < ladder.size(); ++i) {
      R[i] = expansion_residual(p, ladder[i]);
    }
    for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
      push(rep,
           "expansion residual ratio a=" + std::to_string(ladder[i + 1]) +
               "/" + std::to_string(ladder[i]),
           R[i + 1] / R[i], 8.0, 2.0, "third-order remainder");
    }
  }

  const Equilibrium eq = equilibrium(p);

  // 2. Amplitude-zero eigenvalue slopes of the critical triple against the
  // closed-form pair {k alpha, -2 k alpha / (k^2 + 1) (double)}.
  {
    const FourierWave flat = newton_refine(p, 0.0, 32);
    const double xi0 = 2e-3;
    const std::array<double, 3> s1 = triple_slopes(flat, xi0, 32);
    const std::array<double, 3> s2 = triple_slopes(flat, 0.5 * xi0, 32);
    std::array<double, 3> expected{
        p.k * eq.alpha,
        -2.0 * p.k * eq.alpha / (p.k * p.k + 1.0),
        -2.0 * p.k * eq.alpha / (p.k * p.k + 1.0)};
    std::sort(expected.begin(), expected.end());
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double extrap = (4.0 * s2[i] - s1[i]) / 3.0;
      worst = std::max(worst, std::abs(extrap - expected[i]));
    }
    const double scale = std::abs(p.k * eq.alpha);
    push(rep, "critical triple slope worst deviation", worst / scale, 0.0,
         1e-10, "Richardson in xi");
  }

  // 3. Discriminant two-path at amplitude zero.
  const DeltaExpansion de = delta_expansion(p);
  const double xi0 = 1e-5;
  const double disc0 =
      critical_cubic(assemble_reduced(p, 0.0, xi0)).discriminant;
  push(rep, "assembled vs closed-form discriminant, a=0",
       disc0 / de.delta0(xi0), 1.0, 1e-8, "xi = 1e-5");

  // 4. Amplitude response of the discriminant against the closed-form rate.
  {
    auto disc_at = [&](double amp) {
      return critical_cubic(assemble_reduced(p, amp, xi0)).discriminant;
    };
    const double base = disc_at(0.0);
    const double s1 = (disc_at(0.01) - base) / (0.01 * 0.01);
    const double s2 = (disc_at(0.005) - base) / (0.005 * 0.005);
    const double extrap = (4.0 * s2 - s1) / 3.0;
    const double denom = std::max({std::abs(de.lambda), std::abs(extrap)});
    const double measured = denom > 0.0 ? (extrap - de.lambda) / denom : 0.0;
    push(rep, "discriminant amplitude rate vs lambda", measured, 0.0, 1e-3,
         "Richardson in a");
  }

  // 5. Index sign against the direct Bloch spectrum.
  {
    const FourierWave wave = newton_refine(p, a, 32);
    const std::array<double, 5> xis{0.01, 0.02, 0.03, 0.04, 0.05};
    const std::vector<BlochSample> samples = sweep_xi(wave, xis, 48);
    double worst_sym = 0.0;
    for (const BlochSample& s : samples) {
      worst_sym = std::max(worst_sym, spectrum_symmetry_check(s));
    }
    push(rep, "spectrum symmetry worst mismatch", worst_sym, 0.0, 1e-8);
    const bool spectral = spectrum_unstable(samples);
    const Classification cl = classify(p.k, p.b);
    if (cl.verdict == StabilityVerdict::Marginal) {
      push(rep, "index sign vs direct spectrum", 0.0, 0.0, 0.0,
           "index marginal; no sign to compare");
    } else {
      const bool index_unstable =
          cl.verdict == StabilityVerdict::ModulationallyUnstable;
      push(rep, "index sign vs direct spectrum", spectral ? 1.0 : 0.0,
           index_unstable ? 1.0 : 0.0, 0.0,
           "direct spectrum is the oracle on disagreement");
    }
  }

  return rep;
}

std::string verify_table(const VerifyReport& rep) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-46s %14s %14s %9s  %s\n", "check",
                "measured", "expected", "tol", "status");
  out += line;
  for (const VerifyRow& row : rep.rows) {
    std::snprintf(line, sizeof line, "%-46s %14.6g %14.6g %9.2g  %s%s%s\n",
                  row.name.c_str(), row.measured, row.expected, row.tol,
                  row.pass ? "PASS" : "FAIL",
                  row.note.empty() ? "" : "  # ", row.note.c_str());
    out += line;
  }
  out += rep.all_pass ? "all checks passed\n" : "SOME CHECKS FAILED\n";
  return out;
}

}  // namespace bnov
