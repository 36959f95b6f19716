#include <doctest.h>

#include "staircase/error.hpp"
#include "staircase/hilbert.hpp"
#include "staircase/standard_form.hpp"

using namespace stair;
using G = std::vector<XYMonomial>;

TEST_CASE("special functions do not decompose") {
  for (i64 d = 5; d <= 30; ++d) CHECK_FALSE(decompose(special_chi(d)).has_value());
  for (i64 d = 0; d <= 4; ++d)
    for (const auto& f : enumerate(d)) CHECK_FALSE(decompose(f).has_value());
}

TEST_CASE("compose examples") {
  const auto one = enumerate(1)[0];
  const auto phi = compose(one, 4);
  CHECK(phi.colength() == 5);
  CHECK(g_star(phi) == 3);
  CHECK(g_star(phi) > deformation_bound(5));
  const auto dec = decompose(phi);
  REQUIRE(dec);
  CHECK(dec->kernel == one);
  CHECK(dec->m == 4);

  const auto top = compose(HilbertFunction::full(), 5);
  CHECK(top.colength() == 5);
  CHECK(g_star(top) == 6);  // g* of the full ideal is 1

  const auto two = enumerate(2)[0];
  CHECK(two.regularity() == 2);
  const auto seven = compose(two, 5);
  CHECK(seven.colength() == 7);
  CHECK(g_star(seven) == 7);

  CHECK_THROWS_AS(compose(two, 3), domain_error);
}

TEST_CASE("compose then decompose round-trips") {
  for (i64 c = 0; c <= 6; ++c)
    for (const auto& psi : enumerate(c))
      for (i64 m = psi.regularity() + 2; m <= psi.regularity() + 8; ++m) {
        const auto phi = compose(psi, m);
        CHECK(g_star(phi) == g_star(psi) + m * (m - 3) / 2 + c);
        if (phi.colength() >= 5 && g_star(phi) > deformation_bound(phi.colength())) {
          const auto dec = decompose(phi);
          REQUIRE(dec);
          CHECK(dec->kernel == psi);
          CHECK(dec->m == m);
        }
      }
}

TEST_CASE("type of a two-level chain") {
  const auto inner = compose(HilbertFunction::full(), 5);
  i64 first = -1;
  for (i64 m0 = 7; m0 <= 30 && first < 0; ++m0) {
    const auto phi = compose(inner, m0);
    if (g_star(phi) > deformation_bound(phi.colength())) first = m0;
  }
  CHECK(first == 8);
  for (i64 m0 : {8, 9, 12}) {
    const auto t = type_of(compose(inner, m0));
    CHECK(t.r() == 1);
    CHECK(t.ms == std::vector<i64>{m0, 5});
    CHECK(t.kernel_c == 0);
    CHECK(chain_violations(t).empty());
  }
  CHECK(type_of(special_chi(9)).r() == -1);
  for (i64 d = 1; d <= 4; ++d)
    for (const auto& f : enumerate(d)) CHECK(type_of(f).r() == -1);
}

TEST_CASE("chain violations are reported") {
  TypeChain t;
  t.ms = {6, 5};
  t.kernel_c = 0;
  CHECK_FALSE(chain_violations(t).empty());
}

TEST_CASE("decomposition ladder over enumerated functions") {
  for (i64 d = 5; d <= 14; ++d) {
    for (const auto& phi : enumerate(d)) {
      if (g_star(phi) <= deformation_bound(d)) continue;
      INFO(phi.str());
      const auto dec = decompose(phi);
      REQUIRE(dec);
      const i64 c = dec->kernel.colength();
      CHECK(dec->m >= c + 2);
      CHECK(c + dec->m == d);
      if (c >= 5 && g_star(dec->kernel) <= deformation_bound(c)) CHECK(dec->m >= 2 * c + 1);
      const auto t = type_of(phi);
      CHECK(t.r() >= 0);
      CHECK(chain_violations(t).empty());
    }
  }
}

TEST_CASE("standard form detection") {
  const auto yI = GradedMonomialIdeal::from_generators(G{{1, 1}, {0, 2}, {4, 0}});
  const auto sf = detect_standard_form(yI);
  CHECK(sf.kind == StandardForm::Kind::y_form);
  CHECK(sf.m == 4);
  REQUIRE(sf.kernel);
  CHECK(sf.kernel->same_ideal(GradedMonomialIdeal::from_generators(G{{1, 0}, {0, 1}})));

  const auto xI = GradedMonomialIdeal::from_generators(G{{1, 1}, {2, 0}, {0, 4}});
  const auto sx = detect_standard_form(xI);
  CHECK(sx.kind == StandardForm::Kind::x_form);
  CHECK(sx.m == 4);

  CHECK(detect_standard_form(special_ideal(8)).kind == StandardForm::Kind::none);
  CHECK(detect_standard_form(GradedMonomialIdeal::full()).kind == StandardForm::Kind::none);
}

TEST_CASE("ideal-level detection agrees with function-level decomposition") {
  for (i64 d = 5; d <= 10; ++d)
    for (const auto& I : enumerate_ideals(d)) {
      const auto phi = HilbertFunction::of(I);
      const auto sf = detect_standard_form(I);
      const auto dec = decompose(phi);
      INFO(I.to_json());
      CHECK(dec.has_value() == (sf.kind != StandardForm::Kind::none));
      if (!dec || sf.kind == StandardForm::Kind::none) continue;
      CHECK(sf.m == dec->m);
      CHECK(HilbertFunction::of(*sf.kernel) == dec->kernel);
      const Letter l = sf.kind == StandardForm::Kind::y_form ? Letter::y : Letter::x;
      CHECK(standard_form_ideal(l, *sf.kernel, sf.m).same_ideal(I));
      const auto t = ideal_type_chain(I);
      CHECK(t.ms == type_of(phi).ms);
      CHECK(static_cast<int>(t.ells.size()) == t.r() + 1);
    }
}

TEST_CASE("iota and markers") {
  using L = Letter;
  CHECK(iota_table({L::x, L::y, L::x, L::x, L::y, L::y}) == std::vector<int>{0, 0, 1, 1, 1, 2, 3});

  TypeChain t;
  t.ells = {L::y};
  t.ms = {7};
  t.kernel_c = 0;
  const auto mk = marker_monomials(t);
  REQUIRE(mk.size() == 1);
  CHECK(mk[0].m_down == Monomial(7, 0, 0));
  CHECK(mk[0].m_up == Monomial(0, 7, 0));
  CHECK(mk[0].n_up == Monomial(0, 6, 1));
  CHECK(mk[0].e_down == Monomial(5, 0, 2));

  TypeChain two;
  two.ells = {L::y, L::x};
  two.ms = {12, 5};
  const auto m2 = marker_monomials(two);
  REQUIRE(m2.size() == 2);
  for (const auto& m : m2) {
    CHECK(m.n_up * Monomial(0, 1, 0) == m.m_up * Monomial(0, 0, 1));
    CHECK(m.n_down * Monomial(1, 0, 0) == m.m_down * Monomial(0, 0, 1));
    CHECK(m.e_up * Monomial(0, 2, 0) == m.m_up * Monomial(0, 0, 2));
    CHECK(m.m_up.degree() == 12);
  }
  CHECK(m2[1].m_up == Monomial(0, 6, 6));
  CHECK(m2[1].m_down == Monomial(5, 1, 6));

  TypeChain tiny;
  tiny.ells = {L::y};
  tiny.ms = {1};
  CHECK_THROWS_AS(marker_monomials(tiny), marker_undefined);
  TypeChain bare;
  bare.ms = {7};
  CHECK_THROWS_AS(marker_monomials(bare), domain_error);
}
