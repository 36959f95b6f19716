#pragma once

#include <compare>
#include <iosfwd>
#include <string>

namespace stair {

// x^ex y^ey z^ez in k[x,y,z].
class Monomial {
 public:
  constexpr Monomial() = default;
  Monomial(int ex, int ey, int ez);

  int ex() const { return ex_; }
  int ey() const { return ey_; }
  int ez() const { return ez_; }
  int degree() const { return ex_ + ey_ + ez_; }
  // Degree in x and y only; the staircase column the monomial sits in.
  int xy_degree() const { return ex_ + ey_; }

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Inverse-lexicographic with x < y < z: compare z, then y, then x.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  int ex_ = 0;
  int ey_ = 0;
  int ez_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace stair
