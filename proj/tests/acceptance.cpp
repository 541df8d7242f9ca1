// Acceptance suite: runs every verification criterion with exact arithmetic
// and prints one pass/fail line per criterion, checking each against its
// wall-clock budget. Exit code 0 iff all pass.

#include <cstdio>
#include <cstdlib>
#include <map>

#include "exg/verification.hpp"

int main() {
  std::uint64_t budget = exg::kDefaultOracleBudget;
  if (const char* env = std::getenv("EXG_ORACLE_BUDGET")) budget = std::strtoull(env, nullptr, 10);

  const std::map<int, double> time_budget = {{1, 1}, {2, 1},  {3, 1}, {4, 30}, {5, 120}, {6, 1},
                                             {7, 5}, {8, 5},  {9, 1}, {10, 5}, {11, 1},  {12, 10}};

  bool ok = true;
  const auto results = exg::run_verification(budget);
  for (const auto& r : results) {
    const double limit = time_budget.at(r.id);
    const bool in_time = r.seconds < limit;
    std::printf("%s criterion %2d: %s — %s [%.2fs, budget %.0fs]\n",
                r.pass && in_time ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
                r.seconds, limit);
    if (!r.pass || !in_time) ok = false;
  }
  std::printf("%s: %zu criteria\n", ok ? "ALL PASS" : "FAILURES PRESENT", results.size());
  return ok ? 0 : 1;
}
