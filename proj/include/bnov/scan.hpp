#pragma once
// Grid scans and file emitters. The parallel kernels partition work by index
// and write results by index, so serial and parallel runs agree bitwise.

#include <bnov/bloch.hpp>
#include <bnov/mi.hpp>

#include <span>
#include <string>
#include <vector>

namespace bnov {

// OpenMP worker cap: BNOV_THREADS if set and positive, else all cores.
int worker_count();

struct RegionScanConfig {
  double k_min = 0.5, k_max = 6.0;
  double b_min = 0.0, b_max = 12.0;
  int nk = 200, nb = 200;
};

struct RegionRow {
  double k, b, g;
  StabilityVerdict verdict;
};

std::vector<RegionRow> region_scan_serial(const RegionScanConfig& cfg);
std::vector<RegionRow> region_scan(const RegionScanConfig& cfg);

std::string region_csv(std::span<const RegionRow> rows);
std::string region_json(std::span<const RegionRow> rows);

// Boundary curves b1(x), b2(x) sampled on a uniform x grid; absent roots are
// written as nan.
std::string boundary_csv(double x_min, double x_max, int n);

std::string spectrum_csv(std::span<const BlochSample> samples);
std::string spectrum_json(std::span<const BlochSample> samples,
                          const char* verdict);

// Empirical instability call for a sweep: any sample with |xi| < 0.05 whose
// max real part exceeds 10x the eigensolver noise floor, taken as
// 1e-9 * max(1, spectral radius).
bool spectrum_unstable(std::span<const BlochSample> samples);

}  // namespace bnov
