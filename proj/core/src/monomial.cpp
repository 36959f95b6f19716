#include "staircase/monomial.hpp"

#include <ostream>
#include <tuple>

#include "staircase/error.hpp"

namespace stair {

Monomial::Monomial(int ex, int ey, int ez) : ex_(ex), ey_(ey), ez_(ez) {
  if (ex < 0 || ey < 0 || ez < 0)
    throw domain_error("negative exponent in monomial (" + std::to_string(ex) + "," +
                       std::to_string(ey) + "," + std::to_string(ez) + ")");
}

Monomial Monomial::operator*(const Monomial& o) const {
  return Monomial(ex_ + o.ex_, ey_ + o.ey_, ez_ + o.ez_);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  return std::tie(a.ez_, a.ey_, a.ex_) <=> std::tie(b.ez_, b.ey_, b.ex_);
}

std::string Monomial::str() const {
  std::string out;
  auto put = [&](char v, int e) {
    if (e == 0) return;
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  put('x', ex_);
  put('y', ey_);
  put('z', ez_);
  return out.empty() ? "1" : out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }

}  // namespace stair
