#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "staircase/error.hpp"
#include "staircase/hilbert.hpp"
#include "staircase/ideal.hpp"

using namespace stair;
using G = std::vector<XYMonomial>;

TEST_CASE("colength of small ideals") {
  CHECK(GradedMonomialIdeal::full().colength() == 0);
  CHECK(GradedMonomialIdeal::from_generators(G{{2, 0}, {1, 2}, {0, 4}}).colength() == 6);
  CHECK(GradedMonomialIdeal::from_generators(G{{1, 1}, {0, 2}, {4, 0}}).colength() == 5);
  CHECK(GradedMonomialIdeal::from_generators(G{{1, 0}, {0, 1}}).colength() == 1);
}

TEST_CASE("columns of (x, y^3)") {
  const auto I = GradedMonomialIdeal::from_generators(G{{1, 0}, {0, 3}});
  CHECK(I.difference() == std::vector<i64>{0, 1, 2, 4});
  CHECK(I.column(1) == Column{0});
  CHECK(I.contains(XYMonomial{0, 3}));
  CHECK_FALSE(I.contains(XYMonomial{0, 2}));
}

TEST_CASE("Borel-fixed examples") {
  for (int e = 4; e <= 8; ++e)
    CHECK(GradedMonomialIdeal::from_generators(G{{2, 0}, {1, e - 2}, {0, e}}).is_borel_fixed());
  CHECK_FALSE(GradedMonomialIdeal::from_generators(G{{1, 1}, {0, 2}, {4, 0}}).is_borel_fixed());
  CHECK(GradedMonomialIdeal::full().is_borel_fixed());
}

TEST_CASE("malformed column data is rejected") {
  // column 1 holds y but column 2 lacks y^2
  CHECK_THROWS_AS(GradedMonomialIdeal({{}, {1}, {0, 1}}, 3), malformed_ideal);
  // stable_from claims fullness too early
  CHECK_THROWS_AS(GradedMonomialIdeal({{}, {0}}, 1), malformed_ideal);
  CHECK_THROWS_AS(GradedMonomialIdeal::from_json(R"({"columns":[[]]})"), malformed_ideal);
  CHECK_THROWS_AS(GradedMonomialIdeal::from_json("not json"), malformed_ideal);
}

TEST_CASE("enumeration matches partitions") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int d = 0; d <= 10; ++d) CHECK(enumerate_ideals(d).size() == counts[d]);
  for (int d = 1; d <= 8; ++d) {
    std::set<std::string> mine, theirs;
    for (const auto& I : enumerate_ideals(d)) mine.insert(I.canonical().to_json());
    for (const auto& p : oracle::partitions(d)) theirs.insert(oracle::partition_ideal(p).canonical().to_json());
    CHECK(mine == theirs);
  }
}

TEST_CASE("from_partition agrees with the partition oracle") {
  for (int d = 1; d <= 8; ++d)
    for (const auto& p : oracle::partitions(d))
      CHECK(GradedMonomialIdeal::from_partition(p).same_ideal(oracle::partition_ideal(p)));
}

TEST_CASE("ideal properties over all small colengths") {
  for (int d = 0; d <= 8; ++d)
    for (const auto& I : enumerate_ideals(d)) {
      INFO(I.to_json());
      CHECK(I.colength() == d);
      CHECK(HilbertFunction::is_valid(I.difference()));
      CHECK(I.first_full() <= d);
      const auto B = I.borel_closure();
      CHECK(B.is_borel_fixed());
      CHECK(B.colength() <= I.colength());
      CHECK(GradedMonomialIdeal::from_json(I.to_json()).to_json() == I.to_json());
      CHECK(GradedMonomialIdeal::from_generators(I.minimal_generators()).same_ideal(I));
    }
}

TEST_CASE("ideals with a given difference function") {
  const auto chi = special_chi(6);
  const auto ideals = ideals_with_difference(chi.diff());
  CHECK(ideals.size() == 6);
  for (const auto& I : ideals) CHECK(HilbertFunction::of(I) == chi);
}
