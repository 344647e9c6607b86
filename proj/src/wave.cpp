#include <bnov/wave.hpp>

#include <bnov/format.hpp>

#include <Eigen/Dense>

#include "json.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bnov {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXd cosine_table_eval(const Eigen::MatrixXd& Cz,
                                  const Eigen::VectorXd& wh) {
  return Cz * wh;
}

// Diagnostic grid: 2(N+1) uniform points of [0, pi], endpoints included.
std::vector<double> diagnostic_grid(int N) {
  const int M = 2 * (N + 1);
  std::vector<double> z(M);
  for (int i = 0; i < M; ++i) z[i] = kPi * i / (M - 1);
  return z;
}

}  // namespace

double eval_cosine_series(std::span<const double> coeffs, double z,
                          int order) {
  if (order < 0 || order > 3) {
    throw DomainError("derivative order must be 0..3");
  }
  double sum = 0.0;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const double mz = m * z;
    double term = 0.0;
    switch (order) {
      case 0: term = std::cos(mz); break;
      case 1: term = -double(m) * std::sin(mz); break;
      case 2: term = -double(m) * double(m) * std::cos(mz); break;
      case 3: term = double(m) * double(m) * double(m) * std::sin(mz); break;
    }
    sum += coeffs[m] * term;
  }
  return sum;
}

FourierWave newton_refine(const ModelParams& p, double a, int N, double tol) {
  validate_params(p);
  if (!std::isfinite(a) || std::abs(a) > 0.3) {
    throw AmplitudeTooLarge("Newton continuation supported for |a| <= 0.3");
  }
  if (N < 8) throw DomainError("N must be at least 8");
  if (!(tol >= 1e-14)) throw DomainError("tol must be at least 1e-14");

  const double k2 = p.k * p.k;
  const double half_b = 0.5 * p.b;
  const Equilibrium eq = equilibrium(p);
  const ExpansionCoeffs ex = expansion_coeffs(p);

  // Unknowns x = (wh_0, wh_2, .., wh_N, c); wh_1 = a pins the amplitude.
  const int n_unknowns = N + 1;
  Eigen::VectorXd wh = Eigen::VectorXd::Zero(N + 1);
  wh[0] = eq.w0 + a * a * ex.e1;
  wh[1] = a;
  wh[2] = a * a * ex.e2;
  double c = eq.c0 + a * a * ex.c2;

  // Collocation nodes z_j = j pi / N and the mode table cos(m z_j).
  Eigen::MatrixXd Cz(N + 1, N + 1);
  for (int j = 0; j <= N; ++j) {
    const double zj = kPi * j / N;
    for (int m = 0; m <= N; ++m) Cz(j, m) = std::cos(m * zj);
  }
  Eigen::VectorXd msq(N + 1);
  for (int m = 0; m <= N; ++m) msq[m] = double(m) * double(m);

  // Collocation residual; false when c - w^2 <= 0 somewhere (the profile
  // equation cannot be evaluated there).
  auto colloc = [&](const Eigen::VectorXd& coeffs_v, double speed,
                    Eigen::VectorXd& w, Eigen::VectorXd& wpp,
                    Eigen::VectorXd& F) -> bool {
    w = cosine_table_eval(Cz, coeffs_v);
    wpp = -cosine_table_eval(Cz, msq.cwiseProduct(coeffs_v));
    for (int j = 0; j <= N; ++j) {
      if (!(speed - w[j] * w[j] > 0.0)) return false;
    }
    F.resize(N + 1);
    for (int j = 0; j <= N; ++j) {
      F[j] = (w[j] - k2 * wpp[j]) * std::pow(speed - w[j] * w[j], half_b) -
             p.d;
    }
    return true;
  };

  const std::vector<double> diag_z = diagnostic_grid(N);
  auto diag_residual = [&](const Eigen::VectorXd& coeffs_v, double speed) {
    std::span<const double> cs(coeffs_v.data(), std::size_t(N + 1));
    double worst = 0.0;
    for (double z : diag_z) {
      const double w = eval_cosine_series(cs, z, 0);
      const double wzz = eval_cosine_series(cs, z, 2);
      if (!(speed - w * w > 0.0)) return std::nan("");
      const double F =
          (w - k2 * wzz) * std::pow(speed - w * w, half_b) - p.d;
      worst = std::max(worst, std::abs(F));
    }
    return worst;
  };

  Eigen::VectorXd w, wpp, F;
  if (!colloc(wh, c, w, wpp, F)) {
    throw ValidityViolated(
        "initial expansion profile leaves the admissible region c - w^2 > 0");
  }
  double diag_res = diag_residual(wh, c);

  // Jacobian columns: column 0 is mode 0, columns 1..N-1 are modes 2..N, the
  // last column is the speed.
  Eigen::MatrixXd J(n_unknowns, n_unknowns);
  bool converged = std::isfinite(diag_res) && diag_res < tol;

  for (int iter = 0; iter < 50 && !converged; ++iter) {
    double res = F.cwiseAbs().maxCoeff();

    Eigen::VectorXd Q(N + 1), dQ(N + 1), lead(N + 1);
    for (int j = 0; j <= N; ++j) {
      const double gap = c - w[j] * w[j];
      Q[j] = std::pow(gap, half_b);
      dQ[j] = half_b * std::pow(gap, half_b - 1.0);
      lead[j] = w[j] - k2 * wpp[j];
    }
    for (int col = 0; col < n_unknowns - 1; ++col) {
      const int m = col == 0 ? 0 : col + 1;
      for (int j = 0; j <= N; ++j) {
        const double basis = Cz(j, m);
        J(j, col) = (1.0 + k2 * msq[m]) * basis * Q[j] +
                    lead[j] * dQ[j] * (-2.0 * w[j] * basis);
      }
    }
    for (int j = 0; j <= N; ++j) J(j, n_unknowns - 1) = lead[j] * dQ[j];

    const Eigen::VectorXd delta = J.partialPivLu().solve(-F);

    double t = 1.0;
    bool accepted = false;
    bool last_inevaluable = false;
    Eigen::VectorXd wh_try, w_try, wpp_try, F_try;
    double c_try = c;
    for (int halving = 0; halving < 20; ++halving) {
      wh_try = wh;
      wh_try[0] += t * delta[0];
      for (int col = 1; col < n_unknowns - 1; ++col) {
        wh_try[col + 1] += t * delta[col];
      }
      c_try = c + t * delta[n_unknowns - 1];
      if (colloc(wh_try, c_try, w_try, wpp_try, F_try)) {
        last_inevaluable = false;
        const double res_try = F_try.cwiseAbs().maxCoeff();
        // The absolute floor keeps the search from stalling once the
        // collocation residual reaches rounding level.
        if (res_try < res || res_try < 1e-14 * p.d) {
          accepted = true;
          break;
        }
      } else {
        last_inevaluable = true;
      }
      t *= 0.5;
    }
    if (!accepted) {
      if (last_inevaluable) {
        throw ValidityViolated(
            "Newton step could not stay inside c - w^2 > 0 after 20 "
            "halvings");
      }
      throw NoConvergence("Newton line search stalled; residual " +
                          fmt_g17(res));
    }
    wh = wh_try;
    c = c_try;
    w = w_try;
    wpp = wpp_try;
    F = F_try;
    diag_res = diag_residual(wh, c);
    converged = std::isfinite(diag_res) && diag_res < tol;
  }

  if (!converged) {
    throw NoConvergence(
        "profile residual stayed above tol after 50 Newton iterations; "
        "reached " +
        fmt_g17(diag_res) + " (raise N or tol)");
  }

  FourierWave wave;
  wave.params = p;
  wave.a = a;
  wave.N = N;
  wave.coeffs.assign(wh.data(), wh.data() + N + 1);
  wave.c = c;
  wave.residual_norm = diag_res;

  // Validity on a 4N+1 point grid of [0, pi]: strictly below the wave-speed
  // ring and a positive momentum-type density w - k^2 w_zz.
  for (int i = 0; i <= 4 * N; ++i) {
    const double z = kPi * i / (4 * N);
    const double wv = eval_cosine_series(wave.coeffs, z, 0);
    const double wzz = eval_cosine_series(wave.coeffs, z, 2);
    if (!(wave.c - wv * wv > 0.0) || !(wv - k2 * wzz > 0.0)) {
      throw ValidityViolated("converged profile violates validity bounds");
    }
  }
  return wave;
}

std::vector<double> profile_residual(const FourierWave& wave) {
  validate_params(wave.params);
  if (int(wave.coeffs.size()) != wave.N + 1) {
    throw DomainError("coeffs size must be N + 1");
  }
  const double k2 = wave.params.k * wave.params.k;
  const double half_b = 0.5 * wave.params.b;
  const std::vector<double> z = diagnostic_grid(wave.N);
  std::vector<double> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double w = eval_cosine_series(wave.coeffs, z[i], 0);
    const double wzz = eval_cosine_series(wave.coeffs, z[i], 2);
    const double gap = wave.c - w * w;
    if (!(gap > 0.0)) {
      throw ValidityViolated("profile leaves the admissible region c - w^2 > 0");
    }
    out[i] = (w - k2 * wzz) * std::pow(gap, half_b) - wave.params.d;
  }
  return out;
}

ProfileDerivatives spectral_derivatives(const FourierWave& wave) {
  if (int(wave.coeffs.size()) != wave.N + 1) {
    throw DomainError("coeffs size must be N + 1");
  }
  const int M = 2 * (wave.N + 1);
  ProfileDerivatives out;
  out.z.resize(M);
  out.w.resize(M);
  out.wz.resize(M);
  out.wzz.resize(M);
  out.wzzz.resize(M);
  for (int i = 0; i < M; ++i) {
    const double z = 2.0 * kPi * i / M;
    out.z[i] = z;
    out.w[i] = eval_cosine_series(wave.coeffs, z, 0);
    out.wz[i] = eval_cosine_series(wave.coeffs, z, 1);
    out.wzz[i] = eval_cosine_series(wave.coeffs, z, 2);
    out.wzzz[i] = eval_cosine_series(wave.coeffs, z, 3);
  }
  return out;
}

std::string wave_to_json(const FourierWave& wave) {
  std::string s = "{\"schema\":1";
  s += ",\"b\":" + fmt_g17(wave.params.b);
  s += ",\"k\":" + fmt_g17(wave.params.k);
  s += ",\"d\":" + fmt_g17(wave.params.d);
  s += ",\"a\":" + fmt_g17(wave.a);
  s += ",\"N\":" + std::to_string(wave.N);
  s += ",\"c\":" + fmt_g17(wave.c);
  s += ",\"coeffs\":[";
  for (std::size_t i = 0; i < wave.coeffs.size(); ++i) {
    if (i) s += ",";
    s += fmt_g17(wave.coeffs[i]);
  }
  s += "]";
  s += ",\"residual_norm\":" + fmt_g17(wave.residual_norm);
  s += "}\n";
  return s;
}

FourierWave wave_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("wave JSON parse failed: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema") || j["schema"] != 1) {
    throw DomainError("wave JSON must be an object with schema 1");
  }
  for (const char* key : {"b", "k", "d", "a", "N", "c", "coeffs",
                          "residual_norm"}) {
    if (!j.contains(key)) {
      throw DomainError(std::string("wave JSON missing field ") + key);
    }
  }
  FourierWave wave;
  wave.params = ModelParams{j["b"].get<double>(), j["k"].get<double>(),
                            j["d"].get<double>()};
  validate_params(wave.params);
  wave.a = j["a"].get<double>();
  wave.N = j["N"].get<int>();
  if (wave.N < 8) throw DomainError("wave JSON N must be at least 8");
  wave.c = j["c"].get<double>();
  if (!j["coeffs"].is_array() ||
      int(j["coeffs"].size()) != wave.N + 1) {
    throw DomainError("wave JSON coeffs must be an array of N + 1 numbers");
  }
  wave.coeffs = j["coeffs"].get<std::vector<double>>();
  if (wave.coeffs[1] != wave.a) {
    throw DomainError("wave JSON coeffs[1] must equal a");
  }
  wave.residual_norm = j["residual_norm"].get<double>();
  return wave;
}

}  // namespace bnov
