#include "staircase/semi_invariant.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>

#include "staircase/error.hpp"

namespace stair {

TorusWeight::TorusWeight(int a, int b, int c) : r0(a), r1(b), r2(c) {
  if (a + b + c != 0) throw domain_error("torus weight must sum to zero");
  if (a == 0 && b == 0 && c == 0) throw domain_error("torus weight must be nonzero");
}

SemiInvariantSpace::SemiInvariantSpace(TorusWeight rho, std::vector<SemiInvariantChain> chains)
    : rho_(rho), chains_(std::move(chains)) {
  if (rho_.r0 + rho_.r1 + rho_.r2 != 0 || (rho_.r0 == 0 && rho_.r1 == 0 && rho_.r2 == 0))
    throw domain_error("torus weight must be nonzero and sum to zero");
  if (chains_.empty()) throw domain_error("a semi-invariant space needs at least one chain");
  degree_ = chains_.front().initial.degree();
  for (const auto& c : chains_) {
    if (c.support.empty() || c.support.front() != 0)
      throw domain_error("chain support must contain step 0");
    if (!std::is_sorted(c.support.begin(), c.support.end()) ||
        std::adjacent_find(c.support.begin(), c.support.end()) != c.support.end())
      throw domain_error("chain support must be strictly increasing");
    if (c.initial.degree() != degree_) throw domain_error("chains of different degrees");
    const int last = c.support.back();
    const auto e = [&](int base, int w) { return static_cast<i64>(base) + static_cast<i64>(last) * w; };
    // exponents are affine in j, so checking both ends covers the chain
    if (e(c.initial.ex(), rho_.r0) < 0 || e(c.initial.ey(), rho_.r1) < 0 || e(c.initial.ez(), rho_.r2) < 0)
      throw domain_error("chain of " + c.initial.str() + " leaves the monomials");
  }
}

Monomial SemiInvariantSpace::step(const SemiInvariantChain& c, int j) const {
  return Monomial(c.initial.ex() + j * rho_.r0, c.initial.ey() + j * rho_.r1, c.initial.ez() + j * rho_.r2);
}

Monomial SemiInvariantSpace::final_monomial(std::size_t i) const {
  return step(chains_.at(i), chains_.at(i).support.back());
}

std::string SemiInvariantSpace::to_json() const {
  nlohmann::json j;
  j["rho"] = {rho_.r0, rho_.r1, rho_.r2};
  j["chains"] = nlohmann::json::array();
  for (const auto& c : chains_) {
    j["chains"].push_back(
        {{"initial", {c.initial.ex(), c.initial.ey(), c.initial.ez()}}, {"support", c.support}});
  }
  return j.dump();
}

SemiInvariantSpace SemiInvariantSpace::from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto rho = j.at("rho").get<std::vector<int>>();
    if (rho.size() != 3) throw domain_error("rho needs three entries");
    std::vector<SemiInvariantChain> chains;
    for (const auto& c : j.at("chains")) {
      const auto e = c.at("initial").get<std::vector<int>>();
      if (e.size() != 3) throw domain_error("initial monomial needs three exponents");
      chains.push_back({Monomial(e[0], e[1], e[2]), c.at("support").get<std::vector<int>>()});
    }
    return SemiInvariantSpace(TorusWeight(rho[0], rho[1], rho[2]), std::move(chains));
  } catch (const nlohmann::json::exception& e) {
    throw domain_error(std::string("space JSON: ") + e.what());
  }
}

std::vector<Column> columns_of(const std::vector<Monomial>& ms, int n) {
  std::vector<Column> cols(n + 1);
  for (const auto& m : ms) {
    if (m.degree() != n) throw domain_error("monomial " + m.str() + " is not of degree " + std::to_string(n));
    cols[m.xy_degree()].push_back(m.ey());
  }
  for (auto& c : cols) std::sort(c.begin(), c.end());
  return cols;
}

GradedMonomialIdeal limit_ideal(const SemiInvariantSpace& V, Direction dir) {
  std::vector<Monomial> ms;
  for (std::size_t i = 0; i < V.chains().size(); ++i)
    ms.push_back(dir == Direction::zero ? V.initial(i) : V.final_monomial(i));
  std::sort(ms.begin(), ms.end());
  if (auto it = std::adjacent_find(ms.begin(), ms.end()); it != ms.end())
    throw degenerate_limit(std::string(dir == Direction::zero ? "initial" : "final") + " monomial " + it->str() +
                           " occurs twice");
  const int n = V.degree();
  auto cols = columns_of(ms, n);
  if (static_cast<int>(cols[n].size()) != n + 1)
    throw domain_error("top column of the limit is not full; use a larger degree");
  return GradedMonomialIdeal(std::move(cols), n).canonical();
}

namespace {

std::vector<Monomial> monomials_of(const GradedMonomialIdeal& I, int n) {
  std::vector<Monomial> out;
  for (int k = 0; k <= n; ++k)
    for (int a : I.column(k)) out.emplace_back(k - a, a, n - k);
  return out;
}

SemiInvariantSpace with_chains(const GradedMonomialIdeal& I, int n, TorusWeight rho,
                               std::vector<SemiInvariantChain> deformed) {
  std::vector<SemiInvariantChain> chains;
  for (const auto& m : monomials_of(I, n)) {
    const bool taken = std::any_of(deformed.begin(), deformed.end(),
                                   [&](const SemiInvariantChain& c) { return c.initial == m; });
    if (!taken) chains.push_back({m, {0}});
  }
  for (auto& c : deformed) {
    if (!I.contains(c.initial)) throw domain_error("chain initial " + c.initial.str() + " is not in the ideal");
    chains.push_back(std::move(c));
  }
  return SemiInvariantSpace(rho, std::move(chains));
}

}  // namespace

SemiInvariantSpace monomial_space(const GradedMonomialIdeal& I, int n) {
  if (n < 0) throw domain_error("degree must be nonnegative");
  if (I.column_size(n) == 0) throw domain_error("ideal has no monomials in degree " + std::to_string(n));
  return with_chains(I, n, TorusWeight(-1, 0, 1), {});
}

SemiInvariantSpace simple_deformation(const GradedMonomialIdeal& I0, XYMonomial M, XYMonomial L, int n) {
  const auto gens = I0.minimal_generators();
  if (std::find(gens.begin(), gens.end(), M) == gens.end())
    throw domain_error("deformed monomial must be a minimal generator");
  if (I0.contains(L)) throw domain_error("target monomial already lies in the ideal");
  if (!I0.contains(XYMonomial{L.a + 1, L.b}) || !I0.contains(XYMonomial{L.a, L.b + 1}))
    throw domain_error("x and y times the target must lie in the ideal");
  if ((L.a + 1 == M.a && L.b == M.b) || (L.a == M.a && L.b + 1 == M.b))
    throw domain_error("the deformed monomial is x or y times the target; the limit would not be an ideal");
  const int degM = M.a + M.b, degL = L.a + L.b;
  if (degL >= degM) throw domain_error("target must have lower degree than the deformed monomial");
  if (n < degM) throw domain_error("degree below the deformed monomial");
  const int v0 = L.a - M.a, v1 = L.b - M.b, v2 = degM - degL;
  const int g = std::gcd(std::gcd(std::abs(v0), std::abs(v1)), v2);
  SemiInvariantChain c{Monomial(M.a, M.b, n - degM), {0, g}};
  return with_chains(I0, n, TorusWeight(v0 / g, v1 / g, v2 / g), {c});
}

SemiInvariantSpace line_deformation_space(int m, int n) {
  if (m < 2) throw domain_error("line deformation needs m >= 2");
  const auto I0 = GradedMonomialIdeal::from_generators({{1, 1}, {0, 2}, {m, 0}});
  return simple_deformation(I0, {m, 0}, {0, 1}, n);
}

namespace {

GradedMonomialIdeal double_deformation_base() {
  return GradedMonomialIdeal::from_generators({{3, 1}, {1, 2}, {0, 3}, {6, 0}});
}

}  // namespace

SemiInvariantSpace double_deformation_space(int n) {
  if (n < 6) throw domain_error("double deformation needs degree >= 6");
  return with_chains(double_deformation_base(), n, TorusWeight(-3, 1, 2),
                     {{Monomial(6, 0, n - 6), {0, 1}}, {Monomial(3, 1, n - 4), {0, 1}}});
}

SemiInvariantSpace double_deformation_space_unreduced(int n) {
  if (n < 6) throw domain_error("double deformation needs degree >= 6");
  return with_chains(double_deformation_base(), n, TorusWeight(-3, 1, 2),
                     {{Monomial(6, 0, n - 6), {0, 2}}, {Monomial(3, 1, n - 4), {0, 1}}});
}

DomainSplit::DomainSplit(int t) : threshold(t) {
  if (t < 0) throw domain_error("domain threshold must be nonnegative");
}

}  // namespace stair
