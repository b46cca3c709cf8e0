// SPDX-License-Identifier: MIT
//
// airframe - rearrangement groups of edge-replacement systems
//
// The acceptance suite: twelve end-to-end checks, each reporting pass or
// fail with a short detail line. Randomized checks draw from a seeded
// generator, so a given seed always produces the same report.

#ifndef AIRFRAME_ACCEPTANCE_HPP_
#define AIRFRAME_ACCEPTANCE_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "airframe/diagram.hpp"

namespace airframe {

  inline constexpr std::uint64_t default_seed  = 20240611;
  inline constexpr int           criteria_count = 12;

  struct CriterionResult {
    int         id = 0;
    std::string title;
    bool        passed = false;
    std::string detail;
  };

  // Uniform length in [0, max_len], letters uniform over names and signs.
  GroupWord random_word(std::mt19937_64&                rng,
                        std::vector<std::string> const& names,
                        std::size_t                     max_len);

  std::string     criterion_title(int id);
  CriterionResult run_criterion(int id, std::uint64_t seed = default_seed);
  // Runs all criteria in order, calling `on_result` after each one.
  std::vector<CriterionResult> run_acceptance(
      std::uint64_t seed = default_seed,
      std::function<void(CriterionResult const&)> const& on_result = {});

}  // namespace airframe

#endif  // AIRFRAME_ACCEPTANCE_HPP_
