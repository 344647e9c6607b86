#pragma once
// Deterministic numeric formatting for file output: 17 significant digits,
// '.' decimal separator, '\n' line endings everywhere.

#include <cstdio>
#include <string>

namespace bnov {

inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace bnov
