#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circleop::acceptance {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string details;
};

/// Runs acceptance criteria 1..8 with fixed seeds. When progress is non-null,
/// one "[PASS]/[FAIL] n name: details" line is written per criterion.
std::vector<CriterionResult> run_all(std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace circleop::acceptance
