#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ordfree {

struct SelftestOptions {
  int max_syllables = 3;
  int exponent_bound = 2;
  std::uint64_t seed = 0;
};

struct CriterionResult {
  int index;
  std::string name;
  bool pass;
  std::string detail;
};

/// Runs the full acceptance suite (exact arithmetic, zero tolerance) and
/// returns one result per criterion. When `log` is given, a PASS/FAIL line
/// per criterion is printed as it finishes.
std::vector<CriterionResult> run_selftest(const SelftestOptions& options,
                                          std::ostream* log = nullptr);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace ordfree
