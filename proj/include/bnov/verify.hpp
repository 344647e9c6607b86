#pragma once
// Cross-validation battery: every asymptotic prediction checked against an
// independent route (expansion residual orders, amplitude-zero eigenvalue
// slopes, the two discriminant paths, and the index sign against the direct
// Bloch spectrum).

#include <bnov/params.hpp>

#include <string>
#include <vector>

namespace bnov {

struct VerifyRow {
  std::string name;
  double measured;
  double expected;
  double tol;  // |measured - expected| <= tol passes
  bool pass;
  std::string note;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool all_pass = true;
};

VerifyReport run_verify(const ModelParams& p, double a = 0.05);
std::string verify_table(const VerifyReport& report);

}  // namespace bnov
