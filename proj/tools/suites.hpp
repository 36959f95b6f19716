#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "staircase/arith.hpp"

namespace stair::cli {

struct SuiteViolation {
  nlohmann::json params;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string suite;
  i64 cases_run = 0;
  std::vector<SuiteViolation> violations;  // sorted by params, then text

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
};

// Range caps; a negative value means "use the suite's default".
struct SuiteOptions {
  i64 max_colength = -1;
  i64 max_frame = -1;
  i64 max_c = -1;
  i64 max_r = -1;
  i64 window = -1;
  i64 max_e = -1;
  std::string name;  // inequality name for the ineq suite; empty runs all
};

const std::vector<std::string>& suite_names();

// Throws domain_error for unknown suites or out-of-range caps.
VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt);

}  // namespace stair::cli
