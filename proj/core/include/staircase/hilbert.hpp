#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "staircase/arith.hpp"
#include "staircase/ideal.hpp"

namespace stair {

// Plane Hilbert function given by its difference function phi'. The stored
// diff runs through the first full index; phi'(n) = n+1 is implied after it.
class HilbertFunction {
 public:
  // Throws invalid_hilbert_function unless the sequence passes both validity
  // conditions; the result is canonicalised (trailing tail trimmed or extended).
  explicit HilbertFunction(std::vector<i64> diff);

  static bool is_valid(const std::vector<i64>& diff);
  static HilbertFunction full();
  static HilbertFunction of(const GradedMonomialIdeal& I);
  // "0,0,3" style; throws invalid_hilbert_function on malformed text.
  static HilbertFunction parse(std::string_view text);

  const std::vector<i64>& diff() const { return diff_; }
  i64 diff_at(i64 n) const;
  // phi(n) = sum_{i<=n} phi'(i)
  i64 value(i64 n) const;
  i64 colength() const { return colength_; }
  // First n with phi'(n) > 0.
  i64 alpha() const;
  // First n with phi'(n) = n+1; 0 for the full ideal.
  i64 regularity() const { return static_cast<i64>(diff_.size()) - 1; }

  // The lex-segment monomial ideal realising this function.
  GradedMonomialIdeal lex_ideal() const;

  std::string str() const;
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
  friend auto operator<=>(const HilbertFunction&, const HilbertFunction&) = default;

 private:
  std::vector<i64> diff_;
  i64 colength_ = 0;
};

// All valid functions of colength d, lexicographic on diff.
std::vector<HilbertFunction> enumerate(i64 d);

// Sum formula; cross-checked against the regularity closed form, which must agree.
i64 g_star(const HilbertFunction& phi);
i64 g_star_sum(const HilbertFunction& phi);
i64 g_star_closed(const HilbertFunction& phi);

// g(d), defined for d >= 5.
i64 deformation_bound(i64 d);

// Hilbert function of (x^2, x y^(e-2), y^e), e = d/2+1 (d even) or of
// (x^2, x y^(e-1), y^e), e = (d+1)/2 (d odd).
GradedMonomialIdeal special_ideal(i64 d);
HilbertFunction special_chi(i64 d);

struct MacaulayCoefficients {
  i64 a = 0;
  i64 b = 0;
  friend bool operator==(const MacaulayCoefficients&, const MacaulayCoefficients&) = default;
};

struct DegreeGenus {
  i64 d = 0;
  i64 g = 0;
  friend bool operator==(const DegreeGenus&, const DegreeGenus&) = default;
};

DegreeGenus macaulay_to_dg(MacaulayCoefficients mc);
MacaulayCoefficients dg_to_macaulay(DegreeGenus dg);

enum class Order { less, equal, greater, incomparable };
std::string to_string(Order o);

// Pointwise comparison of phi; colengths must agree.
Order compare(const HilbertFunction& phi, const HilbertFunction& psi);

}  // namespace stair
