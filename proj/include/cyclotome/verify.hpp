// Property suites and the acceptance checklist.  Each property is a
// self-contained sweep that recomputes its claim from scratch and reports
// pass/fail with a detail string naming the first counterexample, so a red
// line is directly actionable.
#pragma once

#include <string>
#include <vector>

#include "cyclotome/config.hpp"

namespace cyclotome {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Suites: "orders", "affine", "duadic", "css", "all".
std::vector<PropertyResult> verify_suite(const std::string& suite,
                                         const RunConfig& cfg);

// Acceptance checklist entries 1..11.
PropertyResult acceptance_criterion(int index, const RunConfig& cfg);

}  // namespace cyclotome
