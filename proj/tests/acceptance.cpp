// Acceptance battery: one line per criterion, nonzero exit on any failure.
// `--slow` appends the gated degree-4 sweep; `--slow-only` runs just it.

#include <cstring>
#include <iostream>

#include "regrade/verify.hpp"

int main(int argc, char** argv) {
  bool slow = false, slow_only = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) slow = true;
    if (std::strcmp(argv[i], "--slow-only") == 0) slow_only = true;
  }
  std::vector<int> ids;
  if (!slow_only) ids = regrade::verify::default_criteria();
  if (slow || slow_only)
    for (int id : regrade::verify::slow_criteria()) ids.push_back(id);

  int failures = 0;
  for (const auto& r : regrade::verify::run(ids)) {
    std::cout << "criterion " << (r.id < 10 ? " " : "") << r.id << " ["
              << (r.pass ? "PASS" : "FAIL") << "] " << r.name;
    if (!r.detail.empty()) std::cout << " :: " << r.detail;
    std::cout << "\n";
    if (!r.pass) ++failures;
  }
  if (failures)
    std::cout << failures << " criterion(s) failed\n";
  else
    std::cout << "all criteria passed\n";
  return failures;
}
