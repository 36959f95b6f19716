#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "staircase/arith.hpp"
#include "staircase/monomial.hpp"

namespace stair {

// Sorted y-exponents a of the monomials x^(n-a) y^a in one degree n.
using Column = std::vector<int>;

// x^a y^b, used for generators.
struct XYMonomial {
  int a = 0;
  int b = 0;
  friend bool operator==(const XYMonomial&, const XYMonomial&) = default;
  friend auto operator<=>(const XYMonomial&, const XYMonomial&) = default;
};

// Finite-colength monomial ideal on the plane, stored column by column.
// Column n lists the y-exponents present in degree n; columns at index >= the
// stored array length are full, and so is every column from stable_from on.
class GradedMonomialIdeal {
 public:
  // Validates shape, growth, and that columns from stable_from on are full.
  GradedMonomialIdeal(std::vector<Column> columns, int stable_from);

  static GradedMonomialIdeal full();
  // The ideal of k[x,y] generated by the given monomials (z is a non-zero-divisor).
  static GradedMonomialIdeal from_generators(const std::vector<XYMonomial>& gens);
  // The staircase below a partition: x^i y^j is missing iff j < parts[i].
  static GradedMonomialIdeal from_partition(const std::vector<int>& parts);

  const std::vector<Column>& raw_columns() const { return columns_; }
  int stable_from() const { return stable_from_; }

  Column column(int n) const;
  int column_size(int n) const;
  bool contains(int n, int a) const;
  bool contains(const Monomial& m) const { return contains(m.xy_degree(), m.ey()); }
  bool contains(XYMonomial m) const { return contains(m.a + m.b, m.b); }

  i64 colength() const;
  // First degree whose column is full.
  int first_full() const;
  // |column n| for n = 0 .. first_full().
  std::vector<i64> difference() const;

  bool is_borel_fixed() const;
  GradedMonomialIdeal borel_closure() const;
  std::vector<XYMonomial> minimal_generators() const;

  // Same ideal with trailing full columns dropped and stable_from minimal.
  GradedMonomialIdeal canonical() const;
  bool same_ideal(const GradedMonomialIdeal& o) const;
  friend bool operator==(const GradedMonomialIdeal&, const GradedMonomialIdeal&) = default;

  std::string to_json() const;
  static GradedMonomialIdeal from_json(std::string_view text);

 private:
  std::vector<Column> columns_;
  int stable_from_ = 0;
};

// All monomial ideals of colength d, by column-wise search.
std::vector<GradedMonomialIdeal> enumerate_ideals(i64 d);

// All monomial ideals whose column sizes are the given difference function
// (entries beyond the list are taken as full).
std::vector<GradedMonomialIdeal> ideals_with_difference(const std::vector<i64>& diff);

}  // namespace stair
