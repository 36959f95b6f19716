#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace stair {

using i64 = std::int64_t;

namespace checked {

i64 add(i64 a, i64 b);
i64 sub(i64 a, i64 b);
i64 mul(i64 a, i64 b);

}  // namespace checked

// C(n, k); zero when k < 0, n < 0 or k > n. Throws range_error on overflow.
i64 binom(i64 n, i64 k);

i64 ipow(i64 base, int exp);

// Exact rational with 64-bit parts, always reduced, denominator > 0.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(i64 n);  // NOLINT(google-explicit-constructor): integers embed
  Rational(i64 n, i64 d);

  // Parses "1,172", "0.172", "-7/3" or "5" exactly.
  static Rational parse(std::string_view text);

  i64 num() const { return num_; }
  i64 den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  // Throws internal_error unless the value is integral.
  i64 to_integer() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  i64 num_ = 0;
  i64 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace stair
