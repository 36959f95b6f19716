#include "suites.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "staircase/alpha_grade.hpp"
#include "staircase/error.hpp"
#include "staircase/hilbert.hpp"
#include "staircase/inequality.hpp"
#include "staircase/parallel.hpp"
#include "staircase/pyramid.hpp"
#include "staircase/semi_invariant.hpp"
#include "staircase/standard_form.hpp"

namespace stair::cli {

using nlohmann::json;

json VerificationReport::to_json() const {
  json v = json::array();
  for (const auto& x : violations) v.push_back({{"params", x.params}, {"expected", x.expected}, {"got", x.got}});
  return {{"suite", suite}, {"cases_run", cases_run}, {"violations", v}};
}

VerificationReport VerificationReport::from_json(const json& j) {
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.cases_run = j.at("cases_run").get<i64>();
  for (const auto& v : j.at("violations"))
    r.violations.push_back({v.at("params"), v.at("expected").get<std::string>(), v.at("got").get<std::string>()});
  return r;
}

namespace {

// Collects results from parallel workers; emission order is fixed by sort().
class Collector {
 public:
  void count(i64 n = 1) {
    std::lock_guard lock(mu_);
    cases_ += n;
  }
  void fail(json params, std::string expected, std::string got) {
    std::lock_guard lock(mu_);
    out_.push_back({std::move(params), std::move(expected), std::move(got)});
  }
  template <class T>
  void expect_eq(const json& params, const T& expected, const T& got) {
    count();
    if (!(expected == got)) fail(params, show(expected), show(got));
  }
  void expect(const json& params, bool ok, const std::string& what) {
    count();
    if (!ok) fail(params, what, "false");
  }
  VerificationReport finish(std::string suite) {
    std::sort(out_.begin(), out_.end(), [](const SuiteViolation& a, const SuiteViolation& b) {
      return std::tie(a.params, a.expected, a.got) < std::tie(b.params, b.expected, b.got);
    });
    return {std::move(suite), cases_, std::move(out_)};
  }

 private:
  template <class T>
  static std::string show(const T& v) {
    if constexpr (std::is_same_v<T, std::string>)
      return v;
    else if constexpr (std::is_integral_v<T>)
      return std::to_string(v);
    else
      return json(v).dump();
  }

  std::mutex mu_;
  i64 cases_ = 0;
  std::vector<SuiteViolation> out_;
};

i64 pick(i64 value, i64 fallback, i64 lo, i64 hi, const char* flag) {
  const i64 v = value < 0 ? fallback : value;
  if (v < lo || v > hi)
    throw domain_error(std::string(flag) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "], got " + std::to_string(v));
  return v;
}

std::vector<i64> g_stars(const std::vector<HilbertFunction>& fs) {
  std::vector<i64> out;
  for (const auto& f : fs) out.push_back(g_star(f));
  return out;
}

VerificationReport hf_catalog(const SuiteOptions& opt) {
  Collector col;
  const std::map<i64, std::vector<i64>> table{{1, {0}}, {2, {0}}, {3, {0, 1}}, {4, {1, 3}}};
  for (const auto& [d, gs] : table) col.expect_eq<std::vector<i64>>({{"d", d}}, gs, g_stars(enumerate(d)));
  // Every function is realised by some monomial ideal and vice versa.
  const i64 top = pick(opt.max_colength, 8, 1, 10, "--max-colength");
  for (i64 d = 1; d <= top; ++d) {
    std::set<std::vector<i64>> from_ideals;
    for (const auto& I : enumerate_ideals(d)) from_ideals.insert(HilbertFunction::of(I).diff());
    std::set<std::vector<i64>> listed;
    for (const auto& f : enumerate(d)) listed.insert(f.diff());
    col.expect({{"d", d}}, from_ideals == listed, "functions of ideals == enumerated functions");
  }
  return col.finish("hf-catalog");
}

VerificationReport special_chi_suite(const SuiteOptions& opt) {
  Collector col;
  const i64 top = pick(opt.max_colength, 50, 5, 2000, "--max-colength");
  for (i64 d = 5; d <= top; ++d) col.expect_eq<i64>({{"d", d}}, deformation_bound(d), g_star(special_chi(d)));
  return col.finish("special-chi");
}

VerificationReport pyramid_oracle(const SuiteOptions& opt) {
  Collector col;
  const i64 top = pick(opt.max_frame, 9, 1, 9, "--max-frame");
  std::vector<std::pair<int, int>> cases;
  for (int c = 1; c <= top; ++c)
    for (int d = 1; d <= c; ++d) cases.emplace_back(c, d);
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto [c, d] = cases[i];
    const i64 closed = max_weight_closed_form(c, d);
    col.expect_eq<i64>({{"c", c}, {"d", d}, {"oracle", "top-segment"}}, closed,
                       brute_force_max_weight(c, d, OracleKind::top_segment).weight);
    if (c <= 5)
      col.expect_eq<i64>({{"c", c}, {"d", d}, {"oracle", "full-subset"}}, closed,
                         brute_force_max_weight(c, d, OracleKind::full_subset).weight);
  });
  if (top >= 4)
    for (int d = 1; d <= 4; ++d)
      col.expect_eq<i64>({{"c", 4}, {"d", d}, {"table", true}}, std::vector<i64>{3, 5, 6, 7}[d - 1],
                         max_weight_closed_form(4, d));
  return col.finish("pyramid-oracle");
}

VerificationReport pyramid_bound(const SuiteOptions& opt) {
  Collector col;
  const i64 top = pick(opt.max_frame, 64, 1, 100000, "--max-frame");
  for (i64 c = 1; c <= top; ++c) {
    i64 best = 0;
    for (i64 d = 1; d <= c; ++d) best = std::max(best, max_weight_closed_form(c, d));
    col.expect({{"c", c}, {"via", "closed-form"}}, best <= (c - 1) * (c - 1),
                "max weight " + std::to_string(best) + " <= (c-1)^2");
  }
  for (int c = 1; c <= std::min<i64>(top, 9); ++c) {
    i64 best = 0;
    for (int d = 1; d <= c; ++d) best = std::max(best, brute_force_max_weight(c, d).weight);
    col.expect({{"c", c}, {"via", "oracle"}}, best <= i64{c - 1} * (c - 1),
               "max weight " + std::to_string(best) + " <= (c-1)^2");
  }
  return col.finish("pyramid-bound");
}

VerificationReport decomposition_suite(const SuiteOptions& opt) {
  Collector col;
  const i64 top = pick(opt.max_colength, 14, 5, 20, "--max-colength");
  const i64 wide = std::max<i64>(top, std::min<i64>(top + 4, 22));
  std::vector<i64> ds;
  for (i64 d = 5; d <= wide; ++d) ds.push_back(d);
  parallel_for(ds.size(), [&](std::size_t idx) {
    const i64 d = ds[idx];
    const i64 g = deformation_bound(d);
    for (const auto& phi : enumerate(d)) {
      if (g_star(phi) <= g) continue;
      const json p{{"phi", phi.str()}};
      const auto dec = decompose(phi);
      if (!dec) {
        col.fail(p, "decomposition", "none");
        continue;
      }
      const i64 c = dec->kernel.colength();
      const i64 m = dec->m;
      if (d <= top) {
        col.expect(p, m >= c + 2, "m >= c+2 (m=" + std::to_string(m) + ", c=" + std::to_string(c) + ")");
        const TypeChain chain = type_of(phi);
        const auto bad = chain_violations(chain);
        col.count();
        for (const auto& b : bad) col.fail({{"phi", phi.str()}, {"chain", chain.str()}}, "ladder holds", b);
      }
      if (c >= 5 && g_star(dec->kernel) <= deformation_bound(c))
        col.expect(p, m >= 2 * c + 1, "m >= 2c+1 (m=" + std::to_string(m) + ", c=" + std::to_string(c) + ")");
    }
  });
  return col.finish("decomposition");
}

VerificationReport g_star_suite(const SuiteOptions& opt) {
  Collector col;
  const i64 top = pick(opt.max_colength, 12, 1, 20, "--max-colength");
  for (i64 d = 1; d <= top; ++d)
    for (const auto& phi : enumerate(d)) col.expect_eq<i64>({{"phi", phi.str()}}, g_star_sum(phi), g_star_closed(phi));
  return col.finish("g-star");
}

VerificationReport degree_catalog(const SuiteOptions& opt) {
  Collector col;
  const i64 top_e = pick(opt.max_e, 10, 4, 40, "--max-e");
  auto vec = [](const std::array<i64, 5>& a) { return std::vector<i64>(a.begin(), a.end()); };
  for (int e = 4; e <= top_e; ++e)
    col.expect_eq<std::vector<i64>>({{"e", e}}, vec(borel_family_closed_forms(e)), vec(borel_family_degrees(e)));
  col.expect_eq<std::vector<i64>>({{"e", 4}, {"reference", true}}, {1, 4, 5, 4, 1}, vec(borel_family_degrees(4)));
  col.expect_eq<std::vector<i64>>({{"e", 5}, {"reference", true}}, {3, 7, 10, 9, 1}, vec(borel_family_degrees(5)));
  const i64 top_m = pick(opt.max_colength, 10, 4, 40, "--max-colength");
  for (int m = 4; m <= top_m; ++m) {
    const auto V = line_deformation_space(m, m + 2);
    const std::vector<i64> got{cycle_degree(limit_ideal(V, Direction::zero)),
                               cycle_degree(limit_ideal(V, Direction::infinity))};
    col.expect_eq<std::vector<i64>>({{"m", m}, {"fixture", "line"}}, {binom(m, 2) - 1, binom(m + 1, 2)}, got);
  }
  return col.finish("degree-catalog");
}

VerificationReport ineq_suite(const SuiteOptions& opt) {
  Collector col;
  ScanRanges ranges;
  ranges.max_c = pick(opt.max_c, ranges.max_c, 0, 200, "--max-c");
  ranges.max_r = static_cast<int>(pick(opt.max_r, ranges.max_r, 0, 12, "--max-r"));
  ranges.m_window = pick(opt.window, ranges.m_window, 0, 10000, "--window");
  std::vector<std::string> names;
  if (!opt.name.empty())
    names.push_back(opt.name);
  else
    for (const auto& info : inequality_catalog()) names.push_back(info.name);
  for (const auto& n : names) {
    const ScanReport rep = inequality_scan(n, ranges);
    col.count(rep.cases);
    for (const auto& v : rep.violations) {
      json p{{"inequality", n}};
      if (!v.variant.empty()) p["variant"] = v.variant;
      for (const auto& [k, x] : v.params) p[k] = x;
      col.fail(p, v.lhs + " > " + v.rhs, v.lhs + " <= " + v.rhs);
    }
  }
  return col.finish("ineq");
}

VerificationReport bang_suite(const SuiteOptions& opt) {
  Collector col;
  const i64 top = pick(opt.max_colength, 10, 5, 40, "--max-colength");
  for (int m = 4; m <= top; ++m) {
    const auto V = line_deformation_space(m, m + 2);
    const auto phi = HilbertFunction::of(limit_ideal(V, Direction::zero));
    col.expect_eq<bool>({{"m", m}, {"fixture", "line"}}, m >= 5, check_bang(V, phi));
  }
  return col.finish("bang");
}

VerificationReport genus_suite(const SuiteOptions& opt) {
  Collector col;
  const i64 top = pick(opt.max_c, 20, 0, 2000, "--max-c");
  for (i64 c = 0; c <= top; ++c)
    for (i64 m = c + 2; m <= c + 30; ++m)
      for (i64 nu = m; nu <= m + 10; ++nu) {
        const i64 g = genus_nu(c + m, nu);
        col.count();
        if (g >= 0) col.fail({{"c", c}, {"m", m}, {"nu", nu}}, "genus < 0", std::to_string(g));
      }
  return col.finish("genus");
}

struct Fixture {
  std::string name;
  SemiInvariantSpace space;
};

std::vector<Fixture> sandwich_fixtures(i64 max_colength) {
  std::vector<Fixture> out;
  for (int m = 2; m <= 10; ++m)
    out.push_back({"line m=" + std::to_string(m), line_deformation_space(m, m + 2)});
  out.push_back({"double", double_deformation_space(8)});
  for (const auto& k : small_kernel_cases())
    for (i64 m = std::max<i64>(5, k.c + 2); m <= 8; ++m)
      out.push_back({"kernel " + k.label + " m=" + std::to_string(m), realize(k, m).space});
  for (i64 d = 1; d <= std::min<i64>(max_colength, 6); ++d)
    for (const auto& I : enumerate_ideals(d))
      for (const auto& [M, L] : simple_deformation_pairs(I)) {
        const std::string name = "ideal " + I.to_json() + " x^" + std::to_string(M.a) + "y^" + std::to_string(M.b) +
                                 "->x^" + std::to_string(L.a) + "y^" + std::to_string(L.b);
        out.push_back({name, simple_deformation(I, M, L, static_cast<int>(d + 1))});
      }
  return out;
}

VerificationReport stabilization(const SuiteOptions& opt) {
  Collector col;
  const i64 top = pick(opt.max_colength, 8, 1, 10, "--max-colength");
  for (i64 d = 1; d <= top; ++d)
    for (const auto& I : enumerate_ideals(d)) {
      const i64 base = cycle_degree(I, static_cast<int>(d - 1));
      for (int n = static_cast<int>(d); n <= d + 6; ++n)
        col.expect_eq<i64>({{"ideal", I.to_json()}, {"n", n}}, base, cycle_degree(I, n));
    }
  const auto fixtures = sandwich_fixtures(top);
  parallel_for(fixtures.size(), [&](std::size_t i) {
    const auto& f = fixtures[i];
    const AlphaRange range = minmax_alpha_grade(f.space);
    for (Direction dir : {Direction::zero, Direction::infinity}) {
      const i64 deg = cycle_degree(limit_ideal(f.space, dir));
      col.expect({{"fixture", f.name}, {"limit", dir == Direction::zero ? "zero" : "infinity"}},
                 range.min <= deg && deg <= range.max,
                 std::to_string(range.min) + " <= " + std::to_string(deg) + " <= " + std::to_string(range.max));
    }
  });
  return col.finish("stabilization");
}

VerificationReport small_kernel(const SuiteOptions& opt) {
  Collector col;
  const i64 top = pick(opt.max_colength, 10, 5, 30, "--max-colength");
  for (const auto& k : small_kernel_cases())
    for (i64 m = std::max<i64>(5, k.c + 2); m <= top; ++m) {
      const json p{{"case", k.label}, {"m", m}};
      const RealizedCase rc = realize(k, m);
      col.expect_eq<std::vector<i64>>(p, k.zero.terms(m), nonzero_column_grades(rc.zero));
      col.expect_eq<std::vector<i64>>(p, k.infinity.terms(m), nonzero_column_grades(rc.infinity));
      const i64 delta = cycle_degree(rc.infinity) - cycle_degree(rc.zero);
      col.expect_eq<i64>(p, k.delta_m * m + k.delta_const, delta);
      col.expect_eq<bool>(p, m >= k.min_m, q_value(k.c + m, m - 1) > delta);
    }
  return col.finish("small-kernel");
}

using SuiteFn = VerificationReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"hf-catalog", hf_catalog},       {"special-chi", special_chi_suite}, {"pyramid-oracle", pyramid_oracle},
      {"pyramid-bound", pyramid_bound}, {"decomposition", decomposition_suite}, {"g-star", g_star_suite},
      {"degree-catalog", degree_catalog}, {"ineq", ineq_suite},             {"bang", bang_suite},
      {"genus", genus_suite},           {"stabilization", stabilization},   {"small-kernel", small_kernel},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt) {
  for (const auto& [n, f] : registry())
    if (n == suite) return f(opt);
  throw domain_error("unknown suite \"" + suite + "\"");
}

}  // namespace stair::cli
