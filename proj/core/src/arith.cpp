#include "staircase/arith.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>

#include "staircase/error.hpp"

namespace stair {

namespace checked {

namespace {
[[noreturn]] void overflow(const char* op) {
  throw range_error(std::string("64-bit overflow in ") + op);
}
}  // namespace

i64 add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

i64 sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
  return r;
}

i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

}  // namespace checked

i64 binom(i64 n, i64 k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (i64 i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > INT64_MAX) throw range_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<i64>(r);
}

i64 ipow(i64 base, int exp) {
  i64 r = 1;
  for (int i = 0; i < exp; ++i) r = checked::mul(r, base);
  return r;
}

namespace {

i64 narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw range_error("rational component overflows 64 bits");
  return static_cast<i64>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(__int128 n, __int128 d) {
  if (d == 0) throw domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational::Rational(i64 n) : num_(n), den_(1) {}

Rational::Rational(i64 n, i64 d) {
  if (d == 0) throw domain_error("rational with zero denominator");
  __int128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  __int128 g = gcd128(nn, dd);
  if (g > 1) {
    nn /= g;
    dd /= g;
  }
  num_ = narrow(nn);
  den_ = narrow(dd);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  for (auto& ch : s)
    if (ch == ',') ch = '.';
  if (s.empty()) throw domain_error("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational a = parse(s.substr(0, slash));
    Rational b = parse(s.substr(slash + 1));
    return a / b;
  }
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  __int128 n = 0, d = 1;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '.') {
      if (seen_dot) throw domain_error("bad rational literal: " + s);
      seen_dot = true;
      continue;
    }
    if (ch < '0' || ch > '9') throw domain_error("bad rational literal: " + s);
    seen_digit = true;
    n = n * 10 + (ch - '0');
    if (seen_dot) d *= 10;
    if (n > INT64_MAX || d > INT64_MAX) throw range_error("rational literal too long: " + s);
  }
  if (!seen_digit) throw domain_error("bad rational literal: " + s);
  return make(neg ? -n : n, d);
}

i64 Rational::to_integer() const {
  if (den_ != 1) throw internal_error("expected an integer, got " + str());
  return num_;
}

Rational Rational::operator-() const { return make(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw domain_error("rational division by zero");
  return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace stair
