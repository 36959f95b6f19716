#pragma once

#include <string>
#include <vector>

#include "staircase/arith.hpp"
#include "staircase/ideal.hpp"

namespace stair {

// Columns S_0..S_{c-1} with S_i a subset of {0..i}; d counts the frame cells
// not in the pyramid, d = sum (i+1 - |S_i|).
class Pyramid {
 public:
  Pyramid() = default;
  Pyramid(int frame, std::vector<Column> columns);
  // S_i = {a(i), ..., i}; a(i) in [0, i+1].
  static Pyramid from_top_segments(const std::vector<int>& a);
  // Columns 0..d-1 of an ideal of colength d.
  static Pyramid from_ideal(const GradedMonomialIdeal& I);

  int frame() const { return frame_; }
  const std::vector<Column>& columns() const { return columns_; }
  i64 colength() const;
  i64 size() const;  // number of monomials in the pyramid
  bool is_top_segment() const;
  // a(i) for a top-segment pyramid; throws domain_error otherwise.
  std::vector<int> a_vector() const;

  // Multiply every monomial by y (frame grows by one).
  Pyramid shifted() const;
  // Move the lowest monomial of S_i to just below S_j.
  Pyramid moved(int i, int j) const;

  friend bool operator==(const Pyramid&, const Pyramid&) = default;

 private:
  int frame_ = 0;
  std::vector<Column> columns_;
};

// sum(S) - (0+1+...+|S|-1)
i64 column_weight(const Column& s);
// i*a + a - a^2 for S = {a..i}.
i64 top_segment_weight(int i, int a);
i64 weight(const Pyramid& p);

// Closed-form weight change of moved(i, j) on a top-segment pyramid.
i64 move_delta(const Pyramid& p, int i, int j);

struct NRDecomposition {
  enum class Case { pronic, square };  // d = n(n+1) - r  or  d = n^2 - r
  Case kind = Case::square;
  i64 n = 0;
  i64 r = 0;
  i64 value() const { return kind == Case::pronic ? n * (n + 1) - r : n * n - r; }
  friend bool operator==(const NRDecomposition&, const NRDecomposition&) = default;
};
std::string to_string(NRDecomposition::Case k);

NRDecomposition nr_decomposition(i64 d);

// The two closed forms, evaluated exactly for any n, r.
Rational closed_form_pronic(i64 c, i64 n, i64 r);
Rational closed_form_square(i64 c, i64 n, i64 r);
// Rewritten forms in terms of d, cross-checked against the above.
Rational closed_form_pronic_dc(i64 c, i64 n, i64 r);
Rational closed_form_square_dc(i64 c, i64 n, i64 r);

// Needs 1 <= d <= c.
i64 max_weight_closed_form(i64 c, i64 d);

struct OracleResult {
  i64 weight = 0;
  Pyramid witness;
};

enum class OracleKind { top_segment, full_subset };

// Exhaustive maximum; c <= 9 for top segments, c <= 5 for all subsets.
// Witness ties break to the lexicographically smallest a-vector.
OracleResult brute_force_max_weight(int c, int d, OracleKind kind = OracleKind::top_segment);

// Both seams where the two closed forms meet.
bool endpoint_consistency(i64 c, i64 n);

}  // namespace stair
