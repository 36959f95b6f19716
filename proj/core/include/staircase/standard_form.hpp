#pragma once

#include <optional>
#include <string>
#include <vector>

#include "staircase/hilbert.hpp"
#include "staircase/ideal.hpp"
#include "staircase/monomial.hpp"

namespace stair {

enum class Letter { x, y };
char letter_char(Letter l);

// Recursive decomposition data. ms[i] and ds[i] belong to level i; ells is
// empty when the chain came from a Hilbert function alone (the letters are
// not determined by it).
struct TypeChain {
  std::vector<Letter> ells;
  std::vector<i64> ms;
  std::vector<i64> ds;
  i64 kernel_c = 0;
  i64 kernel_kappa = 0;

  int r() const { return static_cast<int>(ms.size()) - 1; }
  std::string str() const;
  friend bool operator==(const TypeChain&, const TypeChain&) = default;
};

struct Decomposition {
  HilbertFunction kernel;
  i64 m = 0;
};

// Empty when d <= 4 or g*(phi) <= g(d).
std::optional<Decomposition> decompose(const HilbertFunction& phi);

// Glues psi under a new top layer of width m; needs m >= reg(psi) + 2.
HilbertFunction compose(const HilbertFunction& psi, i64 m);

TypeChain type_of(const HilbertFunction& phi);

// Human-readable descriptions of every ladder property the chain breaks.
std::vector<std::string> chain_violations(const TypeChain& chain);

// iota(0..r+1): number of y among the first i letters.
std::vector<int> iota_table(const std::vector<Letter>& ells);

struct Markers {
  Monomial m_up, m_down, n_up, n_down, e_up, e_down;
};

// One entry per level 0..r; needs the letters.
std::vector<Markers> marker_monomials(const TypeChain& chain);

struct StandardForm {
  enum class Kind { none, x_form, y_form };
  Kind kind = Kind::none;
  std::optional<GradedMonomialIdeal> kernel;
  i64 m = 0;
};

std::string to_string(StandardForm::Kind k);

// I = l K(-1) + f O(-m) with f the pure power of the other variable.
StandardForm detect_standard_form(const GradedMonomialIdeal& I);

// Iterates detect_standard_form down to the kernel, recording letters.
TypeChain ideal_type_chain(const GradedMonomialIdeal& I);

// l K(-1) + (other variable)^m, the inverse of detection.
GradedMonomialIdeal standard_form_ideal(Letter l, const GradedMonomialIdeal& K, i64 m);

}  // namespace stair
