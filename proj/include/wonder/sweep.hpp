#pragma once

#include <string>
#include <vector>

#include "wonder/weyl.hpp"

namespace wonder {

struct CheckResult {
  std::string name;
  long long passed = 0;
  long long failed = 0;
  std::vector<std::string> counterexamples;  // first few failures only
};

struct SweepReport {
  std::string type;
  int faithful_subsets = 0;
  int subsets_per_I = 0;
  std::vector<CheckResult> checks;

  long long failures() const;
};

/// Runs every degeneration invariant over all faithful I and all J.
SweepReport sweep(const WeylGroup& g);

}  // namespace wonder
