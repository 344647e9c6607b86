#include <bnov/scan.hpp>

#include <bnov/format.hpp>

#include <cmath>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bnov {

namespace {

double grid_point(double lo, double hi, int n, int i) {
  if (n <= 1) return lo;
  return lo + (hi - lo) * i / double(n - 1);
}

void check_scan_config(const RegionScanConfig& cfg) {
  if (cfg.nk < 1 || cfg.nb < 1) {
    throw DomainError("grid sizes must be at least 1");
  }
  if (!(cfg.k_min > 0.0) || !(cfg.k_max >= cfg.k_min) ||
      !(cfg.b_min >= 0.0) || !(cfg.b_max >= cfg.b_min)) {
    throw DomainError("scan ranges must satisfy 0 < k_min <= k_max and "
                      "0 <= b_min <= b_max");
  }
}

RegionRow scan_point(const RegionScanConfig& cfg, long idx) {
  const int i = int(idx / cfg.nb);
  const int j = int(idx % cfg.nb);
  const double k = grid_point(cfg.k_min, cfg.k_max, cfg.nk, i);
  const double b = grid_point(cfg.b_min, cfg.b_max, cfg.nb, j);
  const Classification cl = classify(k, b);
  return {k, b, cl.g, cl.verdict};
}

}  // namespace

int worker_count() {
  int n = 1;
#ifdef _OPENMP
  n = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("BNOV_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 4096) n = int(v);
  }
  return n < 1 ? 1 : n;
}

std::vector<RegionRow> region_scan_serial(const RegionScanConfig& cfg) {
  check_scan_config(cfg);
  const long total = long(cfg.nk) * cfg.nb;
  std::vector<RegionRow> rows(total);
  for (long idx = 0; idx < total; ++idx) rows[idx] = scan_point(cfg, idx);
  return rows;
}

std::vector<RegionRow> region_scan(const RegionScanConfig& cfg) {
  check_scan_config(cfg);
  const long total = long(cfg.nk) * cfg.nb;
  std::vector<RegionRow> rows(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
  for (long idx = 0; idx < total; ++idx) rows[idx] = scan_point(cfg, idx);
  return rows;
}

std::string region_csv(std::span<const RegionRow> rows) {
  std::string out = "k,b,g,verdict\n";
  for (const RegionRow& r : rows) {
    out += fmt_g17(r.k);
    out += ',';
    out += fmt_g17(r.b);
    out += ',';
    out += fmt_g17(r.g);
    out += ',';
    out += verdict_name(r.verdict);
    out += '\n';
  }
  return out;
}

std::string region_json(std::span<const RegionRow> rows) {
  std::string out = "{\"schema\":1,\"rows\":[";
  bool first = true;
  for (const RegionRow& r : rows) {
    if (!first) out += ',';
    first = false;
    out += "{\"k\":" + fmt_g17(r.k) + ",\"b\":" + fmt_g17(r.b) +
           ",\"g\":" + fmt_g17(r.g) + ",\"verdict\":\"" +
           verdict_name(r.verdict) + "\"}";
  }
  out += "]}\n";
  return out;
}

std::string boundary_csv(double x_min, double x_max, int n) {
  if (n < 1) throw DomainError("grid sizes must be at least 1");
  if (!(x_min > 0.0) || !(x_max >= x_min)) {
    throw DomainError("boundary trace needs 0 < x_min <= x_max");
  }
  std::string out = "x,b1,b2\n";
  for (int i = 0; i < n; ++i) {
    const double x = grid_point(x_min, x_max, n, i);
    const RegionBoundary rb = region_boundary(x);
    out += fmt_g17(x);
    out += ',';
    out += rb.has_b1 ? fmt_g17(rb.b1) : "nan";
    out += ',';
    out += rb.has_b2 ? fmt_g17(rb.b2) : "nan";
    out += '\n';
  }
  return out;
}

std::string spectrum_csv(std::span<const BlochSample> samples) {
  std::string out = "xi,index,re,im,max_real_part\n";
  for (const BlochSample& s : samples) {
    for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
      out += fmt_g17(s.xi);
      out += ',';
      out += std::to_string(j);
      out += ',';
      out += fmt_g17(s.eigenvalues[j].real());
      out += ',';
      out += fmt_g17(s.eigenvalues[j].imag());
      out += ',';
      out += fmt_g17(s.max_real_part);
      out += '\n';
    }
  }
  return out;
}

std::string spectrum_json(std::span<const BlochSample> samples,
                          const char* verdict) {
  std::string out = "{\"schema\":1,\"samples\":[";
  bool first = true;
  for (const BlochSample& s : samples) {
    if (!first) out += ',';
    first = false;
    out += "{\"xi\":" + fmt_g17(s.xi) +
           ",\"max_real_part\":" + fmt_g17(s.max_real_part) +
           ",\"eigenvalues\":[";
    for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
      if (j) out += ',';
      out += "[" + fmt_g17(s.eigenvalues[j].real()) + ',' +
             fmt_g17(s.eigenvalues[j].imag()) + "]";
    }
    out += "]}";
  }
  out += "],\"verdict\":\"";
  out += verdict;
  out += "\"}\n";
  return out;
}

bool spectrum_unstable(std::span<const BlochSample> samples) {
  double radius = 1.0;
  for (const BlochSample& s : samples) {
    for (const auto& lambda : s.eigenvalues) {
      radius = std::max(radius, std::abs(lambda));
    }
  }
  const double threshold = 10.0 * 1e-9 * radius;
  for (const BlochSample& s : samples) {
    if (std::abs(s.xi) < 0.05 && s.max_real_part > threshold) return true;
  }
  return false;
}

}  // namespace bnov
