#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exg/torsion.hpp"

namespace exg {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;    // first failure, or a short summary when passing
  std::string citation;  // which curated tables / identities the check rests on
  double seconds = 0.0;
};

// Runs the full verification suite (root data, coset dimensions, subsystem
// enumeration, torsion tables, oracle agreement, kappa, alpha-table
// consistency, generation thresholds, sharpness, two-class bounds,
// permutation characters, gamma). All arithmetic is exact.
std::vector<CriterionResult> run_verification(std::uint64_t oracle_budget = kDefaultOracleBudget);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace exg
