#include "staircase/alpha_grade.hpp"

#include <algorithm>

#include "staircase/error.hpp"
#include "staircase/standard_form.hpp"

namespace stair {

i64 alpha_grade_column(const Column& s) {
  i64 sum = 0;
  for (int a : s) sum += a;
  return sum - binom(static_cast<i64>(s.size()), 2);
}

i64 alpha_grade_columns(const std::vector<Column>& cols) {
  i64 total = 0;
  for (const auto& c : cols) total = checked::add(total, alpha_grade_column(c));
  return total;
}

i64 cycle_degree(const GradedMonomialIdeal& I, int n) {
  if (n < I.colength() - 1)
    throw range_error("cycle degree needs n >= colength - 1 = " + std::to_string(I.colength() - 1));
  i64 total = 0;
  const int top = std::min(n, I.first_full());
  for (int k = 0; k <= top; ++k) total += alpha_grade_column(I.column(k));
  return total;
}

i64 cycle_degree(const GradedMonomialIdeal& I) { return cycle_degree(I, static_cast<int>(I.colength())); }

namespace {

class Selector {
 public:
  Selector(const SemiInvariantSpace& V, std::optional<DomainSplit> split)
      : V_(V), n_(V.degree()), split_(split), sum_(n_ + 1, 0), cnt_(n_ + 1, 0), used_((n_ + 1) * (n_ + 1), 0) {}

  std::optional<AlphaRange> run() {
    // single-monomial chains are fixed; place them first
    for (const auto& c : V_.chains()) {
      if (c.support.size() == 1) {
        if (!place(c.initial)) return std::nullopt;
      } else {
        free_.push_back(&c);
      }
    }
    dfs(0);
    return found_ ? std::optional<AlphaRange>(best_) : std::nullopt;
  }

 private:
  std::size_t key(const Monomial& m) const { return static_cast<std::size_t>(m.ex()) * (n_ + 1) + m.ey(); }

  bool place(const Monomial& m) {
    auto& u = used_[key(m)];
    if (u) return false;
    u = 1;
    sum_[m.xy_degree()] += m.ey();
    ++cnt_[m.xy_degree()];
    return true;
  }
  void unplace(const Monomial& m) {
    used_[key(m)] = 0;
    sum_[m.xy_degree()] -= m.ey();
    --cnt_[m.xy_degree()];
  }

  i64 value() const {
    i64 v = 0;
    for (int k = 0; k <= n_; ++k)
      if (!split_ || split_->in_right(k)) v += sum_[k] - cnt_[k] * (cnt_[k] - 1) / 2;
    return v;
  }

  void dfs(std::size_t i) {
    if (i == free_.size()) {
      const i64 v = value();
      if (!found_) {
        best_ = {v, v};
        found_ = true;
      } else {
        best_.min = std::min(best_.min, v);
        best_.max = std::max(best_.max, v);
      }
      return;
    }
    for (int j : free_[i]->support) {
      const Monomial m = V_.step(*free_[i], j);
      if (!place(m)) continue;
      dfs(i + 1);
      unplace(m);
    }
  }

  const SemiInvariantSpace& V_;
  int n_;
  std::optional<DomainSplit> split_;
  std::vector<i64> sum_, cnt_;
  std::vector<char> used_;
  std::vector<const SemiInvariantChain*> free_;
  AlphaRange best_;
  bool found_ = false;
};

}  // namespace

AlphaRange minmax_alpha_grade(const SemiInvariantSpace& V, std::optional<DomainSplit> right_only, i64 budget) {
  i64 product = 1;
  for (const auto& c : V.chains()) {
    product = checked::mul(product, static_cast<i64>(c.support.size()));
    if (product > budget)
      throw range_error("selection count exceeds the budget of " + std::to_string(budget));
  }
  auto r = Selector(V, right_only).run();
  if (!r) throw degenerate_space("every selection repeats a monomial");
  return *r;
}

i64 q_value(i64 d, i64 n) { return checked::sub(binom(n + 2, 2), d); }

bool check_bang(const SemiInvariantSpace& V, const HilbertFunction& phi) {
  const auto mm = minmax_alpha_grade(V);
  const i64 m = phi.regularity();
  return q_value(phi.colength(), m - 1) + mm.min > mm.max;
}

std::string to_string(ABoundCase k) {
  switch (k) {
    case ABoundCase::I1: return "I1";
    case ABoundCase::I2: return "I2";
    case ABoundCase::II1: return "II1";
    case ABoundCase::II2: return "II2";
  }
  return "?";
}

ABoundCase parse_a_bound_case(const std::string& s) {
  for (auto k : {ABoundCase::I1, ABoundCase::I2, ABoundCase::II1, ABoundCase::II2})
    if (to_string(k) == s) return k;
  throw domain_error("unknown A-bound case '" + s + "'");
}

i64 a_bound(ABoundCase k, i64 c, int r, const std::vector<i64>& ms) {
  if (c < 0 || r < 0) throw domain_error("A-bound needs c >= 0 and r >= 0");
  if (static_cast<int>(ms.size()) != r + 1) throw domain_error("A-bound needs m_0..m_r");
  i64 tail = 0;
  for (int i = 1; i <= r; ++i) tail += ms[i];
  const i64 m0 = ms[0];
  switch (k) {
    case ABoundCase::I1: return r * (r + 3) + tail;
    case ABoundCase::I2: return r * (r + c) + tail;
    case ABoundCase::II1:
      if (r < 1) throw domain_error("case II bounds assume r >= 1");
      return 4 * m0 + r * (r + 3) - c - 1;
    case ABoundCase::II2:
      if (r < 1) throw domain_error("case II bounds assume r >= 1");
      return (c + 2) * m0 + static_cast<i64>(r) * r - 2 * (c + 2) + binom(c, 2);
  }
  throw internal_error("unhandled A-bound case");
}

i64 genus_nu(i64 d, i64 nu) {
  if (nu < 1) throw domain_error("genus formula needs nu >= 1");
  return checked::add(checked::sub(checked::mul(nu - 1, d), binom(nu + 2, 3)), 1);
}

std::array<GradedMonomialIdeal, 6> borel_family_ideals(int e) {
  if (e < 4) throw domain_error("degree catalog needs e >= 4");
  using G = std::vector<XYMonomial>;
  auto make = [](G g) { return GradedMonomialIdeal::from_generators(g); };
  return {make(G{{2, 0}, {1, e - 2}, {0, e}}),
          make(G{{1, 1}, {e - 1, 0}, {0, e}}),
          make(G{{1, 1}, {e, 0}, {0, e - 1}}),
          make(G{{0, 2}, {e - 2, 1}, {e, 0}}),
          make(G{{0, 2}, {e - 1, 1}, {e - 1, 0}}),
          make(G{{2, 0}, {1, e - 1}, {0, e - 1}})};
}

std::array<i64, 5> borel_family_degrees(int e) {
  const auto ideals = borel_family_ideals(e);
  const auto chi = special_chi(2 * (e - 1));
  std::array<i64, 5> out{};
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (HilbertFunction::of(ideals[i]) != chi)
      throw internal_error("catalog ideal " + std::to_string(i + 1) + " has the wrong Hilbert function");
    if (i > 0) out[i - 1] = cycle_degree(ideals[i]);
  }
  return out;
}

std::array<i64, 5> borel_family_closed_forms(int e) {
  if (e < 4) throw domain_error("degree catalog needs e >= 4");
  const i64 b = binom(e - 2, 2);
  return {b, b + e - 1, 2 * b + e - 1, 2 * b + e - 2, 1};
}

}  // namespace stair

namespace stair {

std::vector<i64> nonzero_column_grades(const GradedMonomialIdeal& I) {
  std::vector<i64> out;
  for (int k = 0; k <= I.first_full(); ++k)
    if (const i64 a = alpha_grade_column(I.column(k)); a != 0) out.push_back(a);
  return out;
}

std::vector<i64> ColumnSum::terms(i64 m) const {
  std::vector<i64> t = lead;
  for (i64 k = run_from; k <= m + end_offset; ++k) t.push_back(k);
  return t;
}

i64 ColumnSum::value(i64 m) const {
  i64 v = 0;
  for (i64 t : terms(m)) v += t;
  return v;
}

std::string ColumnSum::str() const {
  std::string s;
  for (i64 t : lead) s += std::to_string(t) + "+";
  s += std::to_string(run_from) + "+...+";
  s += end_offset == 0 ? "m" : "(m" + std::to_string(end_offset) + ")";
  return s;
}

const std::vector<SmallKernelCase>& small_kernel_cases() {
  using X = XYMonomial;
  static const std::vector<SmallKernelCase> cases = {
      {1, "c1", {{1, 0}, {0, 1}}, {}, X{0, 1}, {{}, 2, -1}, {{}, 1, 0}, 1, 1, 5},
      {2, "c2-a", {{1, 0}, {0, 2}}, {}, X{0, 2}, {{1}, 3, -1}, {{}, 2, 0}, 1, 1, 5},
      {2, "c2-b", {{0, 1}, {2, 0}}, {}, X{1, 1}, {{}, 2, -1}, {{}, 2, 0}, 1, 0, 5},
      {3, "c3-a", {{2, 0}, {1, 1}, {0, 2}}, X{2, 1}, X{0, 2}, {{}, 3, -1}, {{2, 4}, 4, -1}, 0, 3, 5},
      {3, "c3-b", {{2, 0}, {1, 1}, {0, 2}}, {}, X{1, 1}, {{}, 3, -1}, {{1}, 3, 0}, 1, 1, 5},
      {3, "c3-c", {{2, 0}, {1, 1}, {0, 2}}, {}, X{0, 2}, {{}, 3, -1}, {{}, 2, 0}, 1, 2, 6},
      {3, "c3-d", {{1, 0}, {0, 3}}, {}, X{0, 3}, {{1, 2}, 4, -1}, {{1}, 3, 0}, 1, 1, 5},
      {3, "c3-e", {{0, 1}, {3, 0}}, {}, X{2, 1}, {{2, 4}, 4, -1}, {{}, 2, 0}, 1, -1, 5},
      {4, "c4-a1", {{2, 0}, {1, 1}, {0, 3}}, {}, X{1, 1}, {{2}, 4, -1}, {{1, 2}, 4, 0}, 1, 1, 6},
      {4, "c4-a2", {{2, 0}, {1, 1}, {0, 3}}, {}, X{0, 3}, {{2}, 4, -1}, {{}, 3, 0}, 1, 1, 6},
      {4, "c4-b1", {{1, 1}, {0, 2}, {3, 0}}, X{3, 1}, X{0, 2}, {{4}, 4, -1}, {{2, 4, 6}, 5, -1}, 0, 4, 5},
      {4, "c4-b2", {{1, 1}, {0, 2}, {3, 0}}, {}, X{2, 1}, {{4}, 4, -1}, {{}, 3, 0}, 1, -1, 5},
      {4, "c4-b3", {{1, 1}, {0, 2}, {3, 0}}, {}, X{0, 2}, {{4}, 4, -1}, {{2, 4}, 4, 0}, 1, 2, 6},
      {4, "c4-c", {{2, 0}, {0, 2}}, {}, X{1, 2}, {{}, 3, -1}, {{}, 3, 0}, 1, 0, 5},
      {4, "c4-d", {{1, 0}, {0, 4}}, {}, X{0, 4}, {{1, 2, 3}, 5, -1}, {{1, 2}, 4, 0}, 1, 1, 6},
      {4, "c4-e", {{0, 1}, {4, 0}}, {}, X{3, 1}, {{2, 4, 6}, 5, -1}, {{2, 4}, 4, 0}, 1, -2, 5},
  };
  return cases;
}

RealizedCase realize(const SmallKernelCase& k, i64 m) {
  if (m < k.c + 2) throw domain_error("case " + k.label + " needs m >= c + 2");
  const auto K = GradedMonomialIdeal::from_generators(k.kernel);
  const auto I0 = standard_form_ideal(Letter::y, K, m);
  const XYMonomial M = k.moved.value_or(XYMonomial{static_cast<int>(m), 0});
  auto V = simple_deformation(I0, M, k.target, static_cast<int>(I0.colength()) + 1);
  auto zero = limit_ideal(V, Direction::zero);
  auto inf = limit_ideal(V, Direction::infinity);
  if (!zero.same_ideal(I0)) throw internal_error("zero limit of " + k.label + " is not the starting ideal");
  return {std::move(zero), std::move(inf), std::move(V)};
}

std::vector<std::pair<XYMonomial, XYMonomial>> simple_deformation_pairs(const GradedMonomialIdeal& I0) {
  std::vector<std::pair<XYMonomial, XYMonomial>> out;
  for (const auto& M : I0.minimal_generators()) {
    for (int k = 0; k < M.a + M.b; ++k) {
      for (int b = 0; b <= k; ++b) {
        const XYMonomial L{k - b, b};
        const XYMonomial xl{L.a + 1, L.b}, yl{L.a, L.b + 1};
        if (I0.contains(L) || !I0.contains(xl) || !I0.contains(yl) || xl == M || yl == M) continue;
        out.emplace_back(M, L);
      }
    }
  }
  return out;
}

}  // namespace stair
