/*
  verify.hpp — the full verification battery behind `verify-suite` and the
  acceptance tests.  Every check is pure and deterministic (fixed RNG
  seeds); results carry the criterion they belong to and their runtime.
*/

#ifndef CIRCUIT_VERIFY_HPP
#define CIRCUIT_VERIFY_HPP

#include <string>
#include <vector>

namespace circuit {

struct CheckResult {
  int criterion = 0;  // 1..9
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerificationRun {
  int n_max = 8;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  double criterion_seconds(int criterion) const;
  bool criterion_passed(int criterion) const;
};

// n_max in [3, 8] bounds the group-theoretic ranges; the surface
// combinatorics always runs to n = 10 as it costs nothing.
VerificationRun run_verification(int n_max);

std::string render_text(const VerificationRun& run);

}  // namespace circuit

#endif
