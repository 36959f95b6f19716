#include <doctest.h>

#include <cstdlib>

#include "staircase/error.hpp"
#include "staircase/inequality.hpp"

using namespace stair;

TEST_CASE("ladder lower bounds") {
  CHECK(ladder_lower_bounds(0, 0) == std::vector<i64>{5});
  CHECK(ladder_lower_bounds(0, 1) == std::vector<i64>{7, 5});
  CHECK(ladder_lower_bounds(0, 2) == std::vector<i64>{14, 7, 5});
  CHECK(ladder_lower_bounds(1, 2) == std::vector<i64>{14, 7, 4});
  CHECK(ladder_lower_bounds(6, 0) == std::vector<i64>{8});
}

TEST_CASE("catalog names") {
  const std::vector<std::string> expected{"star",           "starbis",        "top-chain",  "top-chain-sufficient",
                                          "type-zero",      "ii1-c0",         "ii1",        "ii1-floor",
                                          "ii1-power",      "ii2",            "r1-ii1-yy",  "r1-ii2-yy",
                                          "r1-ii2-yx",      "r1-small-c",     "low-genus-kernel"};
  std::vector<std::string> names;
  for (const auto& info : inequality_catalog()) {
    names.push_back(info.name);
    CHECK_FALSE(info.formula.empty());
  }
  CHECK(names == expected);
  CHECK_THROWS_AS(inequality_scan("no-such-inequality"), domain_error);
}

TEST_CASE("every inequality holds over its side-condition range") {
  for (const auto& info : inequality_catalog()) {
    const auto rep = inequality_scan(info.name);
    INFO(info.name);
    CHECK(rep.cases > 0);
    CHECK(rep.violations.empty());
    if (!rep.violations.empty()) {
      const auto& v = rep.violations.front();
      MESSAGE(v.variant << " " << v.lhs << " <= " << v.rhs);
    }
  }
}

TEST_CASE("range caps are enforced") {
  ScanRanges big;
  big.max_c = 201;
  CHECK_THROWS_AS(inequality_scan("type-zero", big), range_error);
  ScanRanges deep;
  deep.max_r = 13;
  CHECK_THROWS_AS(inequality_scan("ii2", deep), range_error);
}

TEST_CASE("side conditions matter") {
  // Below the ladder the corrected top-chain form fails: r = 1, c = 0, m0 = 4.
  const i64 m = 4, c = 0, r = 1;
  CHECK_FALSE(m * (m - 5) > 2 * (c * c - 2 * c + c * r + r * (r + 3) - 3));
  // At m0 = 2^r (c+2) alone, the r >= 2 bound fails for c = 1; the ladder lifts m0 to 14.
  const i64 m0 = 12;
  CHECK_FALSE(m0 * (m0 - 11) > 2 * 1 + 2 * 0 * 1 + 2 * 2 * 5 - 4);
  CHECK(14 * (14 - 11) > 2 + 20 - 4);
}

TEST_CASE("scan results do not depend on the worker count") {
  ScanRanges small;
  small.max_c = 20;
  small.max_r = 4;
  small.m_window = 15;
  setenv("STAIRCASE_LAB_THREADS", "1", 1);
  const auto one = inequality_scan("star", small);
  setenv("STAIRCASE_LAB_THREADS", "4", 1);
  const auto four = inequality_scan("star", small);
  unsetenv("STAIRCASE_LAB_THREADS");
  CHECK(one.cases == four.cases);
  CHECK(one.violations == four.violations);
}
