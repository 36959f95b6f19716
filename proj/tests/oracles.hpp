#pragma once
// Brute-force reference computations. Nothing here calls the library's own
// enumeration, formulas or search code; only its plain data types are shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "staircase/ideal.hpp"
#include "staircase/semi_invariant.hpp"

namespace oracle {

using i64 = std::int64_t;

inline i64 choose(i64 n, i64 k) {
  if (k < 0 || n < 0 || k > n) return 0;
  i64 r = 1;
  for (i64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Nonincreasing partitions of d.
inline std::vector<std::vector<int>> partitions(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

// Columns of the staircase ideal of a partition: x^i y^j is missing iff
// j < parts[i]; degree n holds a iff a >= parts[n-a].
inline std::vector<std::vector<int>> partition_columns(const std::vector<int>& parts) {
  const int d = [&] {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }();
  auto part = [&](int i) { return i < static_cast<int>(parts.size()) ? parts[i] : 0; };
  std::vector<std::vector<int>> cols;
  for (int n = 0; n <= d; ++n) {
    std::vector<int> c;
    for (int a = 0; a <= n; ++a)
      if (a >= part(n - a)) c.push_back(a);
    cols.push_back(c);
  }
  return cols;
}

inline stair::GradedMonomialIdeal partition_ideal(const std::vector<int>& parts) {
  auto cols = partition_columns(parts);
  const int top = static_cast<int>(cols.size()) - 1;
  return stair::GradedMonomialIdeal(std::move(cols), top);
}

// Difference sequences phi'(0..d) of colength d satisfying: phi'(n) <= n+1,
// and strict growth phi'(n+1) > phi'(n) from the first nonzero entry until full.
inline std::vector<std::vector<i64>> hilbert_differences(int d) {
  std::vector<std::vector<i64>> out;
  std::vector<i64> cur;
  std::function<void(int, i64)> rec = [&](int n, i64 deficit_left) {
    if (deficit_left == 0) {
      // everything from n on must be full; check growth into the full tail
      std::vector<i64> full = cur;
      full.push_back(n + 1);
      bool ok = true;
      bool started = false;
      for (std::size_t i = 0; i + 1 < full.size(); ++i) {
        if (full[i] > 0) started = true;
        if (started && full[i] < static_cast<i64>(i) + 1 && full[i + 1] <= full[i]) ok = false;
      }
      if (ok) {
        // trim to the first full index
        std::size_t k = 0;
        while (full[k] != static_cast<i64>(k) + 1) ++k;
        full.resize(k + 1);
        out.push_back(full);
      }
      return;
    }
    if (n > d) return;
    for (i64 v = 0; v <= n; ++v) {  // v = n+1 would add no deficit and is the full case
      const i64 deficit = n + 1 - v;
      if (deficit > deficit_left) continue;
      cur.push_back(v);
      rec(n + 1, deficit_left - deficit);
      cur.pop_back();
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// g* = sum_{n=0}^{d} phi(n) - C(d+3,3) + d^2 + 1, phi read off the differences.
inline i64 g_star(const std::vector<i64>& diff, i64 d) {
  i64 phi = 0, total = 0;
  for (i64 n = 0; n <= d; ++n) {
    phi += n < static_cast<i64>(diff.size()) ? diff[n] : n + 1;
    total += phi;
  }
  return total - choose(d + 3, 3) + d * d + 1;
}

inline i64 column_alpha(const std::vector<int>& s) {
  i64 sum = 0;
  for (int a : s) sum += a;
  const i64 k = static_cast<i64>(s.size());
  return sum - k * (k - 1) / 2;
}

// Maximal weight over every pyramid of frame c and colength d, scanning all
// subsets of each column {0..i}.
inline i64 max_pyramid_weight(int c, int d) {
  std::vector<std::vector<i64>> best_by_removed(c);  // column i: best weight when removing r cells
  for (int i = 0; i < c; ++i) {
    best_by_removed[i].assign(i + 2, INT64_MIN);
    for (unsigned mask = 0; mask < (1u << (i + 1)); ++mask) {
      std::vector<int> s;
      for (int a = 0; a <= i; ++a)
        if (mask & (1u << a)) s.push_back(a);
      const int removed = i + 1 - static_cast<int>(s.size());
      best_by_removed[i][removed] = std::max(best_by_removed[i][removed], column_alpha(s));
    }
  }
  std::vector<i64> dp(d + 1, INT64_MIN);
  dp[0] = 0;
  for (int i = 0; i < c; ++i) {
    std::vector<i64> nx(d + 1, INT64_MIN);
    for (int have = 0; have <= d; ++have) {
      if (dp[have] == INT64_MIN) continue;
      for (int r = 0; r <= i + 1 && have + r <= d; ++r)
        nx[have + r] = std::max(nx[have + r], dp[have] + best_by_removed[i][r]);
    }
    dp = nx;
  }
  return dp[d];
}

// All top-segment a-vectors of frame c and colength d (a(i) in [0, i+1]).
inline std::vector<std::vector<int>> top_segment_vectors(int c, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == c) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int a = 0; a <= std::min(i + 1, left); ++a) {
      cur.push_back(a);
      rec(i + 1, left - a);
      cur.pop_back();
    }
  };
  rec(0, d);
  return out;
}

inline i64 top_weight(const std::vector<int>& a) {
  i64 w = 0;
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    std::vector<int> s;
    for (int k = a[i]; k <= i; ++k) s.push_back(k);
    w += column_alpha(s);
  }
  return w;
}

struct Extremes {
  i64 min = INT64_MAX;
  i64 max = INT64_MIN;
  bool any = false;
};

// Extremes of the alpha-grade over collision-free selections, by plain
// recursion with a set of chosen monomials.
inline Extremes selection_extremes(const stair::SemiInvariantSpace& V, int right_of = -1) {
  Extremes ex;
  const int n = V.degree();
  std::set<std::tuple<int, int, int>> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == V.chains().size()) {
      std::vector<std::vector<int>> cols(n + 1);
      for (const auto& [x, y, z] : chosen) cols[x + y].push_back(y);
      i64 total = 0;
      for (int k = 0; k <= n; ++k) {
        if (k <= right_of) continue;
        std::sort(cols[k].begin(), cols[k].end());
        total += column_alpha(cols[k]);
      }
      ex.any = true;
      ex.min = std::min(ex.min, total);
      ex.max = std::max(ex.max, total);
      return;
    }
    const auto& c = V.chains()[i];
    for (int j : c.support) {
      const auto m = V.step(c, j);
      const auto key = std::make_tuple(m.ex(), m.ey(), m.ez());
      if (chosen.count(key)) continue;
      chosen.insert(key);
      rec(i + 1);
      chosen.erase(key);
    }
  };
  rec(0);
  return ex;
}

}  // namespace oracle
