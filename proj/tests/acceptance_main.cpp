// SPDX-License-Identifier: MIT
//
// Runs the twelve acceptance criteria and prints one line per criterion.
// Usage: acceptance_suite [seed]

#include <cstdlib>
#include <iostream>
#include <string>

#include "airframe/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = airframe::default_seed;
  if (argc > 1) {
    seed = std::stoull(argv[1]);
  }
  std::cout << "acceptance suite, seed " << seed << std::endl;
  int  failed  = 0;
  auto results = airframe::run_acceptance(seed, [&](airframe::CriterionResult const& r) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail
              << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
