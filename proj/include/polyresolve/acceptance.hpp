#pragma once

// The acceptance suite: eleven end-to-end checks of the constructions against
// their bounds and the oracles.  Shared by the test binary and the CLI
// `selftest` verb.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace polyresolve {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  long long elapsed_ms = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  // Criteria to run (1..11); empty means all.
  std::vector<int> only;
};

// Runs the selected criteria in order; `on_result` (if set) is called as each
// one finishes.  Exceptions inside a criterion are reported as failures.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  3  exact diameters: ... (12 ms)" style line.
std::string format_result(const CriterionResult& r);

}  // namespace polyresolve
