#pragma once

#include <string>
#include <vector>

namespace fdl::selftest {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // first mismatch, or a short summary on success
};

// The embedded fixture checks, in a fixed order.
std::vector<Check> fixture_checks();

Check evaluation_check();
Check fuzzy_bisimulation_check();
Check crisp_bisimilarity_check();
Check quotient_check();
Check separation_check();

}  // namespace fdl::selftest
