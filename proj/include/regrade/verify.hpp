#pragma once

#include <optional>
#include <string>
#include <vector>

namespace regrade::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Criteria 1..15 are the default battery; 16 is the slow degree-4 sweep over
// Z2 x Z2, gated behind the "slow" suite.
std::vector<int> default_criteria();
std::vector<int> slow_criteria();

// Suite name -> criterion ids ("all", "slow", or a single named criterion).
std::optional<std::vector<int>> suite(const std::string& name);
std::vector<std::pair<int, std::string>> catalog();

std::vector<CriterionResult> run(const std::vector<int>& ids);

}  // namespace regrade::verify
