#pragma once
// Shared helpers for the unit suites.

#include <cmath>
#include <random>
#include <vector>

namespace testutil {

inline double rel_diff(double got, double want) {
  const double scale = std::max({1.0, std::abs(got), std::abs(want)});
  return std::abs(got - want) / scale;
}

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = n == 1 ? lo : lo + (hi - lo) * i / double(n - 1);
  }
  return out;
}

// Deterministic parameter draws shared across suites.
struct ParamRng {
  std::mt19937 gen{20240817u};
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
};

}  // namespace testutil
