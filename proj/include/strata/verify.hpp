#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace strata {

enum class Scale { quick, full };

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass, first failures otherwise
  double ms = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Runs the eight named verification checks. quick restricts the family
// parameters to n = 5 and (p, n) = (3, 3); full runs n in {5,6,7} and
// (p, n) in {(3,3), (3,4), (5,3)}. inject_fault corrupts one expected bound
// coefficient so the harness's failure reporting can be exercised.
// only_check selects a single check by 1-based index (0 = all).
VerificationReport run_verification(Scale scale, bool inject_fault = false,
                                    int only_check = 0);

// Text rendering includes per-check wall-clock; the JSON payload omits the
// timings so byte-stable golden files are possible.
std::string render_text(const VerificationReport& report);
nlohmann::json verification_to_json(const VerificationReport& report);

}  // namespace strata
