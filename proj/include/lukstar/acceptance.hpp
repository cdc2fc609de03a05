#pragma once

// The reproduction suite: twelve numbered checks, each with an exact
// expected outcome and, where one is pinned, a wall-clock budget.

#include <string>
#include <vector>

namespace lukstar {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool correct = false;
  double seconds = 0;
  double budget = 0;  // seconds; 0 = unbounded
  std::string detail;

  bool within_budget() const noexcept { return budget <= 0 || seconds < budget; }
  bool pass() const noexcept { return correct && within_budget(); }
};

constexpr int kCriteria = 12;

/// Throws OutOfRange unless 1 <= id <= kCriteria.
CriterionResult run_criterion(int id);

/// "PASS   1  Pi below 200  (0.00 s, limit 1 s)"
std::string format_line(const CriterionResult& r);

}  // namespace lukstar
