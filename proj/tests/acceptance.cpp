// Acceptance suite: one PASS/FAIL line per criterion.

#include <iostream>

#include "polyresolve/acceptance.hpp"

int main() {
  bool all = true;
  polyresolve::run_acceptance({}, [&](const polyresolve::CriterionResult& r) {
    std::cout << polyresolve::format_result(r) << std::endl;
    all = all && r.pass;
  });
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
