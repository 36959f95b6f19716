#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "staircase/ideal.hpp"
#include "staircase/monomial.hpp"

namespace stair {

// Weight rho of a one-parameter torus action; rho0 + rho1 + rho2 = 0.
struct TorusWeight {
  int r0 = 0, r1 = 0, r2 = 0;
  TorusWeight() = default;
  TorusWeight(int a, int b, int c);
  friend bool operator==(const TorusWeight&, const TorusWeight&) = default;
};

// initial * X^(j rho) for every j in support; support is sorted, starts at 0.
struct SemiInvariantChain {
  Monomial initial;
  std::vector<int> support;
  friend bool operator==(const SemiInvariantChain&, const SemiInvariantChain&) = default;
};

// Span of semi-invariants, one per chain, all of one total degree. Only the
// support pattern of each chain is kept; coefficients are taken as nonzero.
class SemiInvariantSpace {
 public:
  SemiInvariantSpace(TorusWeight rho, std::vector<SemiInvariantChain> chains);

  const TorusWeight& rho() const { return rho_; }
  const std::vector<SemiInvariantChain>& chains() const { return chains_; }
  int degree() const { return degree_; }

  Monomial step(const SemiInvariantChain& c, int j) const;
  Monomial initial(std::size_t i) const { return chains_[i].initial; }
  Monomial final_monomial(std::size_t i) const;

  std::string to_json() const;
  static SemiInvariantSpace from_json(std::string_view text);

  friend bool operator==(const SemiInvariantSpace&, const SemiInvariantSpace&) = default;

 private:
  TorusWeight rho_;
  std::vector<SemiInvariantChain> chains_;
  int degree_ = 0;
};

enum class Direction { zero, infinity };

// Column sets (x,y-degree k -> y-exponents) of a set of degree-n monomials.
std::vector<Column> columns_of(const std::vector<Monomial>& ms, int n);

// Span of initial (zero) or final (infinity) monomials, read as an ideal.
// Needs the top column to be full; duplicates throw degenerate_limit.
GradedMonomialIdeal limit_ideal(const SemiInvariantSpace& V, Direction dir);

// Degree-n piece of I as a space of single-monomial chains.
SemiInvariantSpace monomial_space(const GradedMonomialIdeal& I, int n);

// I0 with the minimal generator M deformed towards L (degree n piece):
// one two-term chain M -> L z^k, the rest monomials. L must lie outside I0
// with xL, yL in I0 other than M, and deg L < deg M.
SemiInvariantSpace simple_deformation(const GradedMonomialIdeal& I0, XYMonomial M, XYMonomial L, int n);

// f = x^m + y z^(m-1) over the kernel (x, y): limits (y(x,y), x^m) and (y, x^(m+1)).
SemiInvariantSpace line_deformation_space(int m, int n);

// Double deformation x^6 -> x^3 y z^2 -> y^2 z^4 over y(x^3, xy, y^2) + x^6.
SemiInvariantSpace double_deformation_space(int n);

// Same chains written without reduction (x^6 carries steps 0 and 2).
SemiInvariantSpace double_deformation_space_unreduced(int n);

// Splits x,y-degrees at threshold: left <= threshold < right.
struct DomainSplit {
  int threshold = 0;
  explicit DomainSplit(int t);
  bool in_left(int k) const { return k <= threshold; }
  bool in_right(int k) const { return k > threshold; }
};

}  // namespace stair
