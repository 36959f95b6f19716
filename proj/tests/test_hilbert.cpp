#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "staircase/error.hpp"
#include "staircase/hilbert.hpp"

using namespace stair;

TEST_CASE("validity of difference functions") {
  CHECK(HilbertFunction::is_valid({0, 0, 3}));
  CHECK(HilbertFunction::is_valid({0, 2}));
  CHECK_FALSE(HilbertFunction::is_valid({0, 1, 1}));
  CHECK_FALSE(HilbertFunction::is_valid({0, 3}));
  CHECK_THROWS_AS(HilbertFunction({0, 1, 1}), invalid_hilbert_function);
  CHECK_THROWS_AS(HilbertFunction::parse("0,a"), invalid_hilbert_function);
  CHECK_THROWS_AS(HilbertFunction::parse(""), invalid_hilbert_function);
  CHECK(HilbertFunction::parse(" 0, 0 ,3") == HilbertFunction({0, 0, 3}));
}

TEST_CASE("catalog of colengths 1 to 4") {
  auto gs = [](i64 d) {
    std::vector<i64> v;
    for (const auto& f : enumerate(d)) v.push_back(g_star(f));
    return v;
  };
  CHECK(gs(1) == std::vector<i64>{0});
  CHECK(gs(2) == std::vector<i64>{0});
  CHECK(gs(3) == std::vector<i64>{0, 1});
  CHECK(gs(4) == std::vector<i64>{1, 3});
  CHECK(enumerate(4)[0].regularity() == 3);
}

TEST_CASE("regularity") {
  CHECK(HilbertFunction::full().regularity() == 0);
  CHECK(g_star(HilbertFunction::full()) == 1);
  CHECK(special_chi(6).regularity() == 4);
  CHECK(HilbertFunction({0, 0, 3}).regularity() == 2);
}

TEST_CASE("g(d) and the special function") {
  CHECK(deformation_bound(5) == 2);
  CHECK(deformation_bound(6) == 4);
  CHECK(deformation_bound(7) == 6);
  CHECK_THROWS_AS(deformation_bound(4), domain_error);
  CHECK(g_star(special_chi(6)) == 4);
  CHECK(g_star(special_chi(5)) == 2);
  CHECK(g_star(special_chi(40)) == 361);
  CHECK_THROWS_AS(special_chi(4), domain_error);
  for (i64 d = 5; d <= 50; ++d) CHECK(g_star(special_chi(d)) == deformation_bound(d));
}

TEST_CASE("Macaulay coefficients") {
  CHECK(macaulay_to_dg({6, 8}) == DegreeGenus{5, 3});
  for (i64 a = 4; a <= 30; ++a) {
    for (i64 b = a; b <= a + 20; ++b) CHECK(dg_to_macaulay(macaulay_to_dg({a, b})) == MacaulayCoefficients{a, b});
    CHECK(macaulay_to_dg({a, a}).g == (a * a - 5 * a + 4) / 2);
  }
  CHECK_THROWS_AS(macaulay_to_dg({3, 5}), domain_error);
  CHECK_THROWS_AS(macaulay_to_dg({6, 5}), domain_error);
}

TEST_CASE("comparison") {
  const auto f4 = enumerate(4);
  CHECK(compare(f4[0], f4[0]) == Order::equal);
  CHECK(compare(f4[0], f4[1]) == Order::less);
  CHECK(compare(f4[1], f4[0]) == Order::greater);
  CHECK_THROWS_AS(compare(f4[0], enumerate(3)[0]), domain_error);
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
  for (int d = 0; d <= 8; ++d) {
    std::vector<std::vector<i64>> mine;
    for (const auto& f : enumerate(d)) mine.push_back(f.diff());
    CHECK(mine == oracle::hilbert_differences(d));
    std::set<std::vector<i64>> from_ideals;
    for (const auto& I : enumerate_ideals(d)) from_ideals.insert(HilbertFunction::of(I).diff());
    CHECK(std::set<std::vector<i64>>(mine.begin(), mine.end()) == from_ideals);
  }
}

TEST_CASE("g* properties up to colength 12") {
  for (i64 d = 1; d <= 12; ++d) {
    const auto fs = enumerate(d);
    i64 best = INT64_MIN;
    for (const auto& f : fs) {
      INFO(f.str());
      CHECK(g_star_sum(f) == g_star_closed(f));
      CHECK(g_star(f) == oracle::g_star(f.diff(), d));
      CHECK(f.regularity() <= d);
      CHECK(f.colength() == d);
      CHECK(HilbertFunction::of(f.lex_ideal()) == f);
      best = std::max(best, g_star(f));
    }
    CHECK(best == oracle::choose(d - 1, 2));
    CHECK(fs.back().regularity() == d);
    CHECK(g_star(fs.back()) == best);
    for (const auto& a : fs)
      for (const auto& b : fs)
        if (compare(a, b) == Order::less) CHECK(g_star(a) < g_star(b));
  }
}
