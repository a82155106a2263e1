#pragma once

#include <string>
#include <vector>

#include "monopath/caps.hpp"

namespace monopath {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct SuiteReport {
  std::string name;
  std::string title;
  double time_limit_seconds = 0;  // 0: no limit
  double seconds = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  bool within_time() const { return time_limit_seconds <= 0 || seconds <= time_limit_seconds; }
};

// counts, coherence, roundtrip, charpoly, faces, swap, vertices, upper,
// prop51, coset, remark2, fraction: one suite per acceptance criterion.
const std::vector<std::string>& suite_names();

// Throws InvalidInput for an unknown suite name.
SuiteReport run_suite(const std::string& name, const Caps& caps = {});

}  // namespace monopath
