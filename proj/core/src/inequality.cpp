#include "staircase/inequality.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "staircase/alpha_grade.hpp"
#include "staircase/error.hpp"
#include "staircase/parallel.hpp"

namespace stair {

namespace {

using R = Rational;

struct Sink {
  i64 cases = 0;
  std::vector<Violation> violations;

  void check(const std::string& variant, ScanParams params, const R& lhs, const R& rhs) {
    ++cases;
    if (!(lhs > rhs)) violations.push_back({variant, std::move(params), lhs.str(), rhs.str()});
  }
};

i64 pow2(int k) { return ipow(2, k); }

// Every chain m_0..m_r whose lower levels sit within `window` of their
// ladder bounds and whose m_0 lies within m_window of its bound.
void for_each_chain(i64 c, int r, const ScanRanges& rg, const std::function<void(const std::vector<i64>&)>& f) {
  std::vector<i64> ms(r + 1);
  std::function<void(int, i64)> level = [&](int i, i64 below) {
    // below = m_(i+1) + ... + m_r
    if (i == 0) {
      const i64 lb = std::max(c + 2 + below, pow2(r) * (c + 2));
      for (i64 m = lb; m <= lb + rg.m_window; ++m) {
        ms[0] = m;
        f(ms);
      }
      return;
    }
    const i64 lb = i == r ? std::max(c + 2, 5 - c) : c + 2 + below;
    for (i64 m = lb; m <= lb + rg.chain_window; ++m) {
      ms[i] = m;
      level(i - 1, below + m);
    }
  };
  level(r, 0);
}

ScanParams chain_params(i64 c, const std::vector<i64>& ms) {
  ScanParams p{{"c", c}, {"r", static_cast<i64>(ms.size()) - 1}};
  for (std::size_t i = 0; i < ms.size(); ++i) p.emplace_back("m" + std::to_string(i), ms[i]);
  return p;
}

void star_like(i64 c, const ScanRanges& rg, Sink& sink, bool bis) {
  for (int r = 1; r <= rg.max_r; ++r) {
    for_each_chain(c, r, rg, [&](const std::vector<i64>& ms) {
      i64 d = c;
      for (i64 m : ms) d += m;
      const i64 q = q_value(d, ms[0] - 1);
      for (auto k : {ABoundCase::I1, ABoundCase::I2, ABoundCase::II1, ABoundCase::II2}) {
        const bool case_two = k == ABoundCase::II1 || k == ABoundCase::II2;
        if (case_two && r < 2) continue;
        const i64 a = a_bound(k, c, r, ms);
        const i64 rhs = bis ? a : (c - 1) * (c - 1) + c * (r + 1) + a;
        sink.check(to_string(k), chain_params(c, ms), R(q), R(rhs));
      }
    });
  }
}

struct Scan {
  InequalityInfo info;
  std::function<void(i64 c, const ScanRanges&, Sink&)> run;
};

// m from lb to lb + window
template <class F>
void m_range(i64 lb, const ScanRanges& rg, F f) {
  for (i64 m = lb; m <= lb + rg.m_window; ++m) f(m);
}

const std::vector<Scan>& scans() {
  static const R k5_4 = R::parse("1,25");
  static const R k1_02 = R::parse("1,02");
  static const R k7_344 = R::parse("7,344");
  static const R k1_5 = R::parse("1,5");
  static const R k2_92 = R::parse("2,92");
  static const R k6_6 = R::parse("6,6");
  static const R k0_344 = R::parse("0.344");
  static const R k5_344 = R::parse("5,344");
  static const R k2_029584 = R::parse("2,029584");
  static const R k3_252832 = R::parse("3,252832");
  static const R k1_717584 = R::parse("1,717584");

  static const std::vector<Scan> all = {
      {{"star", "Q(m0-1) > (c-1)^2 + c(r+1) + A, A the case bound on the exact chain",
        "c >= 1; ladder chains; bounds I1, I2 for r >= 1 and II1, II2 for r >= 2"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         if (c >= 1) star_like(c, rg, s, false);
       }},
      {{"starbis", "Q(m0-1) > A on the exact chain", "c = 0; ladder chains; same bounds as star"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         if (c == 0) star_like(c, rg, s, true);
       }},
      {{"top-chain", "m0(m0-1)/2 > c^2 + cr + r(r+3) + 1", "r >= 1, m0 >= 2^r (c+2)"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         for (int r = 1; r <= rg.max_r; ++r)
           m_range(pow2(r) * (c + 2), rg, [&](i64 m) {
             s.check("", {{"c", c}, {"r", r}, {"m0", m}}, R(m * (m - 1), 2), R(c * c + c * r + r * (r + 3) + 1));
           });
       }},
      {{"top-chain-sufficient", "m0(m0-5)/2 > c^2 - 2c + cr + r(r+3) - 3",
        "r >= 1, m0 >= max(2^r (c+2), ladder); keeps the m_1 + ... + m_r terms the shorter form drops"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         for (int r = 1; r <= rg.max_r; ++r)
           m_range(std::max(pow2(r) * (c + 2), ladder_lower_bounds(c, r)[0]), rg, [&](i64 m) {
             s.check("", {{"c", c}, {"r", r}, {"m0", m}}, R(m * (m - 5), 2),
                     R(c * c - 2 * c + c * r + r * (r + 3) - 3));
           });
       }},
      {{"type-zero", "m(m-1) > 2c^2 - 2c + 2", "c >= 5 with m >= 2c+1; 1 <= c <= 4 with m >= c+2"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         if (c < 1) return;
         m_range(c >= 5 ? 2 * c + 1 : c + 2, rg, [&](i64 m) {
           s.check("", {{"c", c}, {"m", m}}, R(m * (m - 1)), R(2 * c * c - 2 * c + 2));
         });
       }},
      {{"ii1-c0", "m0(m0-11) > 2r(r+3) - 6", "c = 0, r >= 2, m0 >= max(ladder, 2^(r+1))"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         if (c != 0) return;
         for (int r = 2; r <= rg.max_r; ++r)
           m_range(std::max(ladder_lower_bounds(0, r)[0], pow2(r + 1)), rg, [&](i64 m) {
             s.check("", {{"r", r}, {"m0", m}}, R(m * (m - 11)), R(2 * r * (r + 3) - 6));
           });
       }},
      {{"ii1", "m0(m0-11) > 2c^2 + 2(r-2)c + 2r(r+3) - 4", "c >= 1, r >= 2, m0 >= max(2^r (c+2), ladder)"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         if (c < 1) return;
         for (int r = 2; r <= rg.max_r; ++r)
           m_range(std::max(pow2(r) * (c + 2), ladder_lower_bounds(c, r)[0]), rg, [&](i64 m) {
             s.check("", {{"c", c}, {"r", r}, {"m0", m}}, R(m * (m - 11)),
                     R(2 * c * c + 2 * (r - 2) * c + 2 * r * (r + 3) - 4));
           });
       }},
      {{"ii1-floor", "2^r (c+2) [2^r c + 2^(r+1) - 11] > 2c^2 + 2(r-2)c + 2r(r+3) - 4",
        "r = 2 with c >= 2; r >= 3 with c >= 1"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         for (int r = 2; r <= rg.max_r; ++r) {
           if (c < (r == 2 ? 2 : 1)) continue;
           const i64 p = pow2(r);
           s.check("", {{"c", c}, {"r", r}}, R(p * (c + 2) * (p * c + 2 * p - 11)),
                   R(2 * c * c + 2 * (r - 2) * c + 2 * r * (r + 3) - 4));
         }
       }},
      {{"ii1-power", "(2^(2r) - 2) c^2 + (2^(2r+1) - 2r) c > 2r(r+3)", "r >= 3, c >= 1"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         if (c < 1) return;
         for (int r = 3; r <= rg.max_r; ++r)
           s.check("", {{"c", c}, {"r", r}}, R((pow2(2 * r) - 2) * c * c + (pow2(2 * r + 1) - 2 * r) * c),
                   R(2 * r * (r + 3)));
       }},
      {{"ii2", "m0(m0-2c-7) > 3c^2 + 2cr - 7c - 10 + 2r^2", "r >= 2, c >= 0, m0 >= 2^r (c+2)"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         for (int r = 2; r <= rg.max_r; ++r)
           m_range(pow2(r) * (c + 2), rg, [&](i64 m) {
             s.check("", {{"c", c}, {"r", r}, {"m0", m}}, R(m * (m - 2 * c - 7)),
                     R(3 * c * c + 2 * c * r - 7 * c - 10 + 2 * r * r));
           });
       }},
      {{"r1-ii1-yy", "m0(m0-9) > 2c^2 - 2c - 6", "r = 1, c >= 3, m0 >= 2c+4"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         if (c < 3) return;
         m_range(2 * c + 4, rg, [&](i64 m) {
           s.check("", {{"c", c}, {"m0", m}}, R(m * (m - 9)), R(2 * c * c - 2 * c - 6));
         });
       }},
      {{"r1-ii2-yy", "first: m0(m0-c-5) > 1,25c^2 - 4c - 8; second: m0(m0 - 1,02c - 7,344) > 1,5c^2 - 2,92c - 6,6",
        "r = 1, m0 >= 2c+4; first for all c, second for c >= 4"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         m_range(2 * c + 4, rg, [&](i64 m) {
           const R M(m), C(c);
           s.check("first", {{"c", c}, {"m0", m}}, M * (M - C - R(5)), k5_4 * C * C - R(4) * C - R(8));
           if (c >= 4)
             s.check("second", {{"c", c}, {"m0", m}}, M * (M - k1_02 * C - k7_344), k1_5 * C * C - k2_92 * C - k6_6);
         });
       }},
      {{"r1-ii2-yx", "plain: m0(m0-5) > 2(c-1)^2 (c >= 1) or > -2 (c = 0); order-first: m0(m0-3) > 2c^2 - 4c - 2; "
                     "order-second: m0(m0 - 0.344c - 5,344) > 2,029584c^2 - 3,252832c + 1,717584",
        "r = 1; m0 >= 2c+4 for c >= 1, m0 >= 7 for c = 0; the order variants need c >= 1"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         if (c == 0) {
           m_range(7, rg, [&](i64 m) { s.check("plain", {{"c", 0}, {"m0", m}}, R(m * (m - 5)), R(-2)); });
           return;
         }
         m_range(2 * c + 4, rg, [&](i64 m) {
           const R M(m), C(c);
           s.check("plain", {{"c", c}, {"m0", m}}, R(m * (m - 5)), R(2 * (c - 1) * (c - 1)));
           s.check("order-first", {{"c", c}, {"m0", m}}, R(m * (m - 3)), R(2 * c * c - 4 * c - 2));
           s.check("order-second", {{"c", c}, {"m0", m}}, M * (M - k0_344 * C - k5_344),
                   k2_029584 * C * C - k3_252832 * C + k1_717584);
         });
       }},
      {{"r1-small-c", "c0: m0(m0-3) > 4; c1: m0(m0-5) > 2; c2: m0(m0-7) > -4; c2-sharp: m0(m0-7) > 8 and "
                      "Q(7) > 20 at m0 = 8, m1 = 4; c3: m0(m0-9) > -6",
        "r = 1, c <= 3; m0 >= 7, 6, 8, 9 (sharp), 10 respectively"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         switch (c) {
           case 0: m_range(7, rg, [&](i64 m) { s.check("c0", {{"m0", m}}, R(m * (m - 3)), R(4)); }); break;
           case 1: m_range(6, rg, [&](i64 m) { s.check("c1", {{"m0", m}}, R(m * (m - 5)), R(2)); }); break;
           case 2:
             m_range(8, rg, [&](i64 m) { s.check("c2", {{"m0", m}}, R(m * (m - 7)), R(-4)); });
             m_range(9, rg, [&](i64 m) { s.check("c2-sharp", {{"m0", m}}, R(m * (m - 7)), R(8)); });
             s.check("c2-sharp", {{"m0", 8}, {"m1", 4}, {"d", 14}}, R(q_value(14, 7)), R((8 + 9) + 1 + 2));
             break;
           case 3: m_range(10, rg, [&](i64 m) { s.check("c3", {{"m0", m}}, R(m * (m - 9)), R(-6)); }); break;
           default: break;
         }
       }},
      {{"low-genus-kernel",
        "plain: m(m-1) > 2c^2 - 2c + 2; with-s: m(m-1) > 2c^2 - 2c + 2(s+2) + 2(s+1)m + s(s+1); "
        "bound: m(m - c/3 - 7/3) > 73/36 c^2 - 29/18 c + 28/9",
        "r = 0, c >= 5, m >= 2c+1; with-s over 0 <= s < (c-2)/6"},
       [](i64 c, const ScanRanges& rg, Sink& s) {
         if (c < 5) return;
         m_range(2 * c + 1, rg, [&](i64 m) {
           const R M(m), C(c);
           s.check("plain", {{"c", c}, {"m", m}}, R(m * (m - 1)), R(2 * c * c - 2 * c + 2));
           for (i64 k = 0; 6 * k < c - 2; ++k)
             s.check("with-s", {{"c", c}, {"m", m}, {"s", k}}, R(m * (m - 1)),
                     R(2 * c * c - 2 * c + 2 * (k + 2) + 2 * (k + 1) * m + k * (k + 1)));
           s.check("bound", {{"c", c}, {"m", m}}, M * (M - C / R(3) - R(7, 3)),
                   R(73, 36) * C * C - R(29, 18) * C + R(28, 9));
         });
       }},
  };
  return all;
}

}  // namespace

std::vector<i64> ladder_lower_bounds(i64 c, int r) {
  if (c < 0 || r < 0) throw domain_error("ladder bounds need c >= 0 and r >= 0");
  std::vector<i64> lb(r + 1);
  i64 below = 0;
  for (int i = r; i >= 0; --i) {
    lb[i] = i == r ? std::max(c + 2, 5 - c) : c + 2 + below;
    below += lb[i];
  }
  return lb;
}

const std::vector<InequalityInfo>& inequality_catalog() {
  static const std::vector<InequalityInfo> infos = [] {
    std::vector<InequalityInfo> v;
    for (const auto& s : scans()) v.push_back(s.info);
    return v;
  }();
  return infos;
}

ScanReport inequality_scan(const std::string& name, const ScanRanges& rg) {
  if (rg.max_c < 0 || rg.max_r < 0 || rg.m_window < 0 || rg.chain_window < 0)
    throw domain_error("scan ranges must be nonnegative");
  if (rg.max_c > 200 || rg.max_r > 12 || rg.m_window > 10000 || rg.chain_window > 8)
    throw range_error("scan ranges exceed the supported caps (c <= 200, r <= 12, windows <= 10000 / 8)");
  const auto& all = scans();
  auto it = std::find_if(all.begin(), all.end(), [&](const Scan& s) { return s.info.name == name; });
  if (it == all.end()) throw domain_error("unknown inequality '" + name + "'");

  std::vector<Sink> per_c(static_cast<std::size_t>(rg.max_c + 1));
  parallel_for(per_c.size(), [&](std::size_t c) { it->run(static_cast<i64>(c), rg, per_c[c]); });

  ScanReport rep{name, 0, {}};
  for (auto& s : per_c) {
    rep.cases += s.cases;
    rep.violations.insert(rep.violations.end(), s.violations.begin(), s.violations.end());
  }
  std::sort(rep.violations.begin(), rep.violations.end());
  return rep;
}

}  // namespace stair
