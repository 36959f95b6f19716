#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "staircase/arith.hpp"
#include "staircase/hilbert.hpp"
#include "staircase/ideal.hpp"
#include "staircase/semi_invariant.hpp"

namespace stair {

// (c_1 + ... + c_r) - (1 + ... + r-1) for one column {c_1 < ... < c_r}.
i64 alpha_grade_column(const Column& s);
// Sum over the columns of a graded monomial subspace.
i64 alpha_grade_columns(const std::vector<Column>& cols);

// Alpha-grade of the degree-n piece of I; needs n >= colength(I) - 1.
i64 cycle_degree(const GradedMonomialIdeal& I, int n);
// cycle_degree at n = max(colength, 0); the stable value.
i64 cycle_degree(const GradedMonomialIdeal& I);

struct AlphaRange {
  i64 min = 0;
  i64 max = 0;
  friend bool operator==(const AlphaRange&, const AlphaRange&) = default;
};

inline constexpr i64 k_selection_budget = 1'000'000;

// Extremes of the alpha-grade over all collision-free selections of one
// supported monomial per chain. With a split, only right-domain columns count.
AlphaRange minmax_alpha_grade(const SemiInvariantSpace& V, std::optional<DomainSplit> right_only = std::nullopt,
                              i64 budget = k_selection_budget);

// C(n+2, 2) - d
i64 q_value(i64 d, i64 n);

// Q(m-1) + min > max with m the regularity of phi.
bool check_bang(const SemiInvariantSpace& V, const HilbertFunction& phi);

enum class ABoundCase { I1, I2, II1, II2 };
std::string to_string(ABoundCase k);
ABoundCase parse_a_bound_case(const std::string& s);

// ms = (m_0, ..., m_r).
i64 a_bound(ABoundCase k, i64 c, int r, const std::vector<i64>& ms);

// (nu - 1) d - C(nu+2, 3) + 1
i64 genus_nu(i64 d, i64 nu);

// The six monomial ideals with the Hilbert function of (x^2, x y^(e-2), y^e):
// index 0 is that Borel ideal, then c2..c6.
std::array<GradedMonomialIdeal, 6> borel_family_ideals(int e);
// Cycle degrees of c2..c6; e >= 4.
std::array<i64, 5> borel_family_degrees(int e);
std::array<i64, 5> borel_family_closed_forms(int e);

// Nonzero column alpha-grades of I in degree order.
std::vector<i64> nonzero_column_grades(const GradedMonomialIdeal& I);

// "a + b + ... + (m + end_offset)" read as lead terms followed by the
// consecutive run run_from, run_from+1, ..., m + end_offset.
struct ColumnSum {
  std::vector<i64> lead;
  i64 run_from = 0;
  i64 end_offset = 0;
  std::vector<i64> terms(i64 m) const;
  i64 value(i64 m) const;
  std::string str() const;
};

// A simple deformation of I0 = y K(-1) + x^m with rho1 > 0, rho2 > 0 and a
// kernel K of colength c <= 4.
struct SmallKernelCase {
  i64 c = 0;
  std::string label;
  std::vector<XYMonomial> kernel;
  std::optional<XYMonomial> moved;  // empty: x^m
  XYMonomial target;
  ColumnSum zero, infinity;
  i64 delta_m = 0, delta_const = 0;  // deg C_inf - deg C_0 = delta_m * m + delta_const
  i64 min_m = 0;                     // Q(m-1) > delta from here on
};

const std::vector<SmallKernelCase>& small_kernel_cases();

struct RealizedCase {
  GradedMonomialIdeal zero;
  GradedMonomialIdeal infinity;
  SemiInvariantSpace space;
};
RealizedCase realize(const SmallKernelCase& k, i64 m);

// Every (M, L) with M a minimal generator of I0, L outside I0, xL and yL in
// I0, neither equal to M, and deg L < deg M.
std::vector<std::pair<XYMonomial, XYMonomial>> simple_deformation_pairs(const GradedMonomialIdeal& I0);

}  // namespace stair
