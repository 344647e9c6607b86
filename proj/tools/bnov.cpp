// Command-line front end: stability index lookups, region scans, wave
// construction, Bloch spectra, and the cross-validation battery.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error,
// 3 solver failure, 4 eigensolver failure.

#include "CLI11.hpp"

#include <bnov/bloch.hpp>
#include <bnov/format.hpp>
#include <bnov/mi.hpp>
#include <bnov/scan.hpp>
#include <bnov/verify.hpp>
#include <bnov/wave.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw bnov::DomainError("cannot open output file " + path);
  f.write(content.data(), std::streamsize(content.size()));
  if (!f) throw bnov::DomainError("write failed for output file " + path);
}

void check_format(const std::string& format,
                  std::initializer_list<const char*> allowed) {
  for (const char* ok : allowed) {
    if (format == ok) return;
  }
  throw bnov::DomainError("unsupported --format " + format +
                          " for this command");
}

int run_index(double b, double k, const std::string& format,
              const std::string& out) {
  check_format(format, {"text", "json"});
  const bnov::Classification cl = bnov::classify(k, b);
  const bnov::RegionCaseResult rc = bnov::region_case(cl.x);
  std::string s;
  if (format == "json") {
    s = "{\"schema\":1,\"k\":" + bnov::fmt_g17(k) +
        ",\"x\":" + bnov::fmt_g17(cl.x) + ",\"b\":" + bnov::fmt_g17(b) +
        ",\"g\":" + bnov::fmt_g17(cl.g) + ",\"verdict\":\"" +
        bnov::verdict_name(cl.verdict) + "\",\"case\":\"" +
        bnov::region_case_name(rc.kind) + "\"";
    if (rc.kind != bnov::RegionCase::AlwaysPositive) {
      s += ",\"b1\":" + bnov::fmt_g17(rc.b1);
    }
    if (rc.kind == bnov::RegionCase::UnstableBetween) {
      s += ",\"b2\":" + bnov::fmt_g17(rc.b2);
    }
    s += "}\n";
  } else {
    s = "k = " + bnov::fmt_g17(k) + "\n";
    s += "x = " + bnov::fmt_g17(cl.x) + "\n";
    s += "b = " + bnov::fmt_g17(b) + "\n";
    s += "g = " + bnov::fmt_g17(cl.g) + "\n";
    s += std::string("verdict = ") + bnov::verdict_name(cl.verdict) + "\n";
    s += std::string("case = ") + bnov::region_case_name(rc.kind) + "\n";
    if (rc.kind != bnov::RegionCase::AlwaysPositive) {
      s += "b1 = " + bnov::fmt_g17(rc.b1) + "\n";
    }
    if (rc.kind == bnov::RegionCase::UnstableBetween) {
      s += "b2 = " + bnov::fmt_g17(rc.b2) + "\n";
    }
  }
  write_output(out, s);
  return 0;
}

struct RegionArgs {
  bnov::RegionScanConfig cfg;
  bool boundary = false;
  std::string format = "csv";
  std::string out = "-";
};

int run_region(const RegionArgs& args) {
  if (args.boundary) {
    check_format(args.format, {"csv"});
    write_output(args.out,
                 bnov::boundary_csv(args.cfg.k_min * args.cfg.k_min,
                                    args.cfg.k_max * args.cfg.k_max,
                                    args.cfg.nk));
    return 0;
  }
  check_format(args.format, {"csv", "json"});
  const std::vector<bnov::RegionRow> rows = bnov::region_scan(args.cfg);
  write_output(args.out, args.format == "json" ? bnov::region_json(rows)
                                               : bnov::region_csv(rows));
  return 0;
}

struct WaveArgs {
  bnov::ModelParams p{3.0, 1.0, 1.0};
  double a = 0.0;
  int N = 32;
  double tol = 1e-12;
  std::string format = "json";
  std::string out = "-";
};

int run_wave(const WaveArgs& args) {
  check_format(args.format, {"json"});
  const bnov::FourierWave wave =
      bnov::newton_refine(args.p, args.a, args.N, args.tol);
  write_output(args.out, bnov::wave_to_json(wave));
  return 0;
}

struct SpectrumArgs {
  bnov::ModelParams p{3.0, 1.0, 1.0};
  double a = 0.0;
  int N = 48;
  int wave_N = 32;
  double tol = 1e-12;
  double xi_min = 0.0;
  double xi_max = 0.5;
  int n_xi = 26;
  std::string format = "csv";
  std::string out = "-";
};

int run_spectrum(const SpectrumArgs& args) {
  check_format(args.format, {"csv", "json"});
  if (args.n_xi < 1) throw bnov::DomainError("--n-xi must be at least 1");
  const bnov::FourierWave wave =
      bnov::newton_refine(args.p, args.a, args.wave_N, args.tol);
  std::vector<double> xis(args.n_xi);
  for (int i = 0; i < args.n_xi; ++i) {
    xis[i] = args.n_xi == 1 ? args.xi_min
                            : args.xi_min + (args.xi_max - args.xi_min) * i /
                                                double(args.n_xi - 1);
  }
  const std::vector<bnov::BlochSample> samples =
      bnov::sweep_xi(wave, xis, args.N);
  const bool unstable = bnov::spectrum_unstable(samples);
  const char* verdict = unstable ? "unstable" : "stable";
  if (args.format == "json") {
    write_output(args.out, bnov::spectrum_json(samples, verdict));
    return 0;
  }
  write_output(args.out, bnov::spectrum_csv(samples));
  double peak = 0.0;
  for (const bnov::BlochSample& s : samples) {
    peak = std::max(peak, s.max_real_part);
  }
  const std::string line = std::string("empirical verdict: ") + verdict +
                           " (max real part " + bnov::fmt_g17(peak) + ")\n";
  // Keep the CSV stream clean: the verdict goes to whichever of
  // stdout/stderr the CSV did not use.
  if (args.out.empty() || args.out == "-") {
    std::fputs(line.c_str(), stderr);
  } else {
    std::fputs(line.c_str(), stdout);
  }
  return 0;
}

struct VerifyArgs {
  bnov::ModelParams p{3.0, 1.0, 1.0};
  double a = 0.05;
  std::string out = "-";
};

int run_verify(const VerifyArgs& args) {
  const bnov::VerifyReport rep = bnov::run_verify(args.p, args.a);
  write_output(args.out, bnov::verify_table(rep));
  return rep.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Periodic traveling waves of the b-family dispersive equation: "
      "construction, modulational-instability index, Bloch spectra"};
  app.require_subcommand(1);

  double b = 3.0, k = 1.0;
  std::string index_format = "text", index_out = "-";
  CLI::App* cmd_index =
      app.add_subcommand("index", "evaluate the instability index g(k, b)");
  cmd_index->add_option("--b", b, "family exponent")->required();
  cmd_index->add_option("--k", k, "wavenumber")->required();
  cmd_index->add_option("--format", index_format, "text or json");
  cmd_index->add_option("--out", index_out, "output file, - for stdout");

  RegionArgs region;
  CLI::App* cmd_region = app.add_subcommand(
      "region", "scan the (k, b) plane and classify each point");
  cmd_region->add_option("--k-min", region.cfg.k_min, "grid start in k");
  cmd_region->add_option("--k-max", region.cfg.k_max, "grid end in k");
  cmd_region->add_option("--b-min", region.cfg.b_min, "grid start in b");
  cmd_region->add_option("--b-max", region.cfg.b_max, "grid end in b");
  cmd_region->add_option("--nk", region.cfg.nk, "grid points in k");
  cmd_region->add_option("--nb", region.cfg.nb, "grid points in b");
  cmd_region->add_flag("--boundary", region.boundary,
                       "emit the boundary curves b1(x), b2(x) over "
                       "x = k^2 instead of the grid");
  cmd_region->add_option("--format", region.format, "csv or json");
  cmd_region->add_option("--out", region.out, "output file, - for stdout");

  WaveArgs wave;
  CLI::App* cmd_wave = app.add_subcommand(
      "wave", "solve a periodic profile by Newton continuation");
  cmd_wave->add_option("--b", wave.p.b, "family exponent")->required();
  cmd_wave->add_option("--k", wave.p.k, "wavenumber")->required();
  cmd_wave->add_option("--d", wave.p.d, "profile flux constant");
  cmd_wave->add_option("--a", wave.a, "amplitude of the first harmonic")
      ->required();
  cmd_wave->add_option("--N", wave.N, "cosine truncation");
  cmd_wave->add_option("--tol", wave.tol, "residual tolerance");
  cmd_wave->add_option("--format", wave.format, "json");
  cmd_wave->add_option("--out", wave.out, "output file, - for stdout");

  SpectrumArgs spec;
  CLI::App* cmd_spectrum = app.add_subcommand(
      "spectrum", "Bloch eigenvalues of the linearization about a profile");
  cmd_spectrum->add_option("--b", spec.p.b, "family exponent")->required();
  cmd_spectrum->add_option("--k", spec.p.k, "wavenumber")->required();
  cmd_spectrum->add_option("--d", spec.p.d, "profile flux constant");
  cmd_spectrum->add_option("--a", spec.a, "amplitude of the first harmonic")
      ->required();
  cmd_spectrum->add_option("--N", spec.N, "Bloch mode truncation");
  cmd_spectrum->add_option("--wave-N", spec.wave_N, "wave cosine truncation");
  cmd_spectrum->add_option("--tol", spec.tol, "Newton residual tolerance");
  cmd_spectrum->add_option("--xi-min", spec.xi_min, "first Bloch parameter");
  cmd_spectrum->add_option("--xi-max", spec.xi_max, "last Bloch parameter");
  cmd_spectrum->add_option("--n-xi", spec.n_xi, "number of Bloch parameters");
  cmd_spectrum->add_option("--format", spec.format, "csv or json");
  cmd_spectrum->add_option("--out", spec.out, "output file, - for stdout");

  VerifyArgs ver;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "cross-validate asymptotics against independent routes");
  cmd_verify->add_option("--b", ver.p.b, "family exponent")->required();
  cmd_verify->add_option("--k", ver.p.k, "wavenumber")->required();
  cmd_verify->add_option("--d", ver.p.d, "profile flux constant");
  cmd_verify->add_option("--a", ver.a, "amplitude for the spectral check");
  cmd_verify->add_option("--out", ver.out, "output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cmd_index) return run_index(b, k, index_format, index_out);
    if (*cmd_region) return run_region(region);
    if (*cmd_wave) return run_wave(wave);
    if (*cmd_spectrum) return run_spectrum(spec);
    if (*cmd_verify) return run_verify(ver);
  } catch (const bnov::EigensolverFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const bnov::NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bnov::ValidityViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bnov::NoMinimum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bnov::BifurcationInvalid& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bnov::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
