#pragma once

#include <string>
#include <utility>
#include <vector>

#include "staircase/arith.hpp"

namespace stair {

struct ScanRanges {
  i64 max_c = 50;
  int max_r = 6;
  // How far above its lower bound the leading m is scanned.
  i64 m_window = 40;
  // How far above their lower bounds the lower chain levels are scanned.
  i64 chain_window = 2;
};

using ScanParams = std::vector<std::pair<std::string, i64>>;

struct Violation {
  std::string variant;  // which bound or sub-inequality, when a scan has several
  ScanParams params;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct ScanReport {
  std::string name;
  i64 cases = 0;
  std::vector<Violation> violations;  // sorted
};

struct InequalityInfo {
  std::string name;
  std::string formula;      // strict inequality lhs > rhs
  std::string conditions;   // side conditions that filter the scan
};

const std::vector<InequalityInfo>& inequality_catalog();

// Throws domain_error for unknown names.
ScanReport inequality_scan(const std::string& name, const ScanRanges& ranges = {});

// Lower bounds for the chain m_0 > ... > m_r over a kernel of colength c:
// m_r >= max(c+2, 5-c) and m_(i-1) >= c + 2 + m_i + ... + m_r.
std::vector<i64> ladder_lower_bounds(i64 c, int r);

}  // namespace stair
