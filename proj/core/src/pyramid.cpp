#include "staircase/pyramid.hpp"

#include <algorithm>

#include "staircase/error.hpp"

namespace stair {

Pyramid::Pyramid(int frame, std::vector<Column> columns) : frame_(frame), columns_(std::move(columns)) {
  if (frame_ < 1) throw domain_error("pyramid frame must be positive");
  if (static_cast<int>(columns_.size()) != frame_)
    throw domain_error("pyramid with frame " + std::to_string(frame_) + " needs that many columns");
  for (int i = 0; i < frame_; ++i) {
    const Column& s = columns_[i];
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 0 || s[k] > i) throw domain_error("pyramid column " + std::to_string(i) + " leaves [0,i]");
      if (k && s[k - 1] >= s[k]) throw domain_error("pyramid column " + std::to_string(i) + " is not sorted");
    }
  }
}

Pyramid Pyramid::from_top_segments(const std::vector<int>& a) {
  std::vector<Column> cols;
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    if (a[i] < 0 || a[i] > i + 1) throw domain_error("a(" + std::to_string(i) + ") outside [0, i+1]");
    Column s;
    for (int k = a[i]; k <= i; ++k) s.push_back(k);
    cols.push_back(std::move(s));
  }
  return Pyramid(static_cast<int>(a.size()), std::move(cols));
}

Pyramid Pyramid::from_ideal(const GradedMonomialIdeal& I) {
  const int d = static_cast<int>(I.colength());
  if (d < 1) throw domain_error("pyramid of an ideal needs colength >= 1");
  std::vector<Column> cols;
  for (int i = 0; i < d; ++i) cols.push_back(I.column(i));
  return Pyramid(d, std::move(cols));
}

i64 Pyramid::colength() const {
  i64 d = 0;
  for (int i = 0; i < frame_; ++i) d += i + 1 - static_cast<i64>(columns_[i].size());
  return d;
}

i64 Pyramid::size() const {
  i64 s = 0;
  for (const auto& c : columns_) s += static_cast<i64>(c.size());
  return s;
}

bool Pyramid::is_top_segment() const {
  for (int i = 0; i < frame_; ++i) {
    const Column& s = columns_[i];
    if (!s.empty() && (s.back() != i || s.front() != i + 1 - static_cast<int>(s.size()))) return false;
  }
  return true;
}

std::vector<int> Pyramid::a_vector() const {
  if (!is_top_segment()) throw domain_error("a(i) is only defined for top-segment pyramids");
  std::vector<int> a(frame_);
  for (int i = 0; i < frame_; ++i) a[i] = i + 1 - static_cast<int>(columns_[i].size());
  return a;
}

Pyramid Pyramid::shifted() const {
  std::vector<Column> cols(1);
  for (const auto& c : columns_) {
    Column s;
    for (int k : c) s.push_back(k + 1);
    cols.push_back(std::move(s));
  }
  return Pyramid(frame_ + 1, std::move(cols));
}

Pyramid Pyramid::moved(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= frame_ || j >= frame_)
    throw invalid_move("move needs two distinct columns inside the frame");
  if (!is_top_segment()) throw invalid_move("moves are defined on top-segment pyramids");
  auto a = a_vector();
  if (a[i] > i) throw invalid_move("column " + std::to_string(i) + " is empty");
  if (a[j] == 0) throw invalid_move("column " + std::to_string(j) + " is already full");
  ++a[i];
  --a[j];
  return from_top_segments(a);
}

i64 column_weight(const Column& s) {
  i64 sum = 0;
  for (int k : s) sum += k;
  const i64 r = static_cast<i64>(s.size());
  return sum - r * (r - 1) / 2;
}

i64 top_segment_weight(int i, int a) { return static_cast<i64>(i) * a + a - static_cast<i64>(a) * a; }

i64 weight(const Pyramid& p) {
  i64 w = 0;
  for (const auto& c : p.columns()) w = checked::add(w, column_weight(c));
  return w;
}

i64 move_delta(const Pyramid& p, int i, int j) {
  p.moved(i, j);  // validates the preconditions
  const auto a = p.a_vector();
  return 2 * (static_cast<i64>(a[j]) - a[i]) - (j - i) - 2;
}

std::string to_string(NRDecomposition::Case k) { return k == NRDecomposition::Case::pronic ? "pronic" : "square"; }

NRDecomposition nr_decomposition(i64 d) {
  if (d < 1) throw domain_error("NR decomposition needs d >= 1");
  i64 n = 1;
  while ((n + 1) * (n + 1) - n <= d) ++n;  // largest n with n^2 - n < d
  NRDecomposition out;
  if (d <= n * n) {
    out = {NRDecomposition::Case::square, n, n * n - d};
  } else {
    out = {NRDecomposition::Case::pronic, n, n * (n + 1) - d};
  }
  if (out.r < 0 || out.r >= out.n || out.value() != d)
    throw internal_error("NR decomposition of " + std::to_string(d) + " is off");
  return out;
}

namespace {
const Rational k_three_halves = Rational::parse("1,5");
const Rational k_one_half(1, 2);
const Rational k_one_sixth(1, 6);
const Rational k_four_thirds(4, 3);
}  // namespace

Rational closed_form_pronic(i64 c, i64 n, i64 r) {
  const Rational N(n);
  Rational inner = (Rational(c) - k_three_halves) * N + (Rational(c) + Rational(2 * r) - k_one_sixth) -
                   k_four_thirds * N * N;
  return N * inner - Rational(r) * Rational(c);
}

Rational closed_form_square(i64 c, i64 n, i64 r) {
  const Rational N(n);
  Rational inner = (Rational(c) + k_one_half) * N + (Rational(2 * r) - k_one_sixth) - k_four_thirds * N * N;
  return N * inner - Rational(r) * Rational(c + 1);
}

Rational closed_form_pronic_dc(i64 c, i64 n, i64 r) {
  const Rational N(n);
  const i64 d = n * (n + 1) - r;
  return -k_four_thirds * N * N * N - k_three_halves * N * N + (Rational(2 * r) - k_one_sixth) * N +
         Rational(d) * Rational(c);
}

Rational closed_form_square_dc(i64 c, i64 n, i64 r) {
  const Rational N(n);
  const i64 d = n * n - r;
  return -k_four_thirds * N * N * N + k_one_half * N * N + (Rational(2 * r) - k_one_sixth) * N - Rational(r) +
         Rational(d) * Rational(c);
}

i64 max_weight_closed_form(i64 c, i64 d) {
  if (d < 1 || d > c)
    throw domain_error("closed form needs 1 <= d <= c, got c=" + std::to_string(c) + " d=" + std::to_string(d));
  const auto nr = nr_decomposition(d);
  Rational w, w2;
  if (nr.kind == NRDecomposition::Case::pronic) {
    w = closed_form_pronic(c, nr.n, nr.r);
    w2 = closed_form_pronic_dc(c, nr.n, nr.r);
  } else {
    w = closed_form_square(c, nr.n, nr.r);
    w2 = closed_form_square_dc(c, nr.n, nr.r);
  }
  if (w != w2) throw internal_error("closed form and its d,c rewrite differ at c=" + std::to_string(c));
  return w.to_integer();
}

namespace {

struct TopSearch {
  int c, d;
  std::vector<int> a, best_a;
  i64 best = -1;

  void run(int i, int left, i64 w) {
    if (i == c) {
      if (left == 0 && w > best) {
        best = w;
        best_a = a;
      }
      return;
    }
    // the remaining columns i..c-1 can absorb at most sum (k+1)
    const int cap = (c * (c + 1) - i * (i + 1)) / 2;
    if (left > cap) return;
    for (int v = 0; v <= std::min(i + 1, left); ++v) {
      a[i] = v;
      run(i + 1, left - v, w + top_segment_weight(i, v));
    }
  }
};

struct SubsetSearch {
  int c, d;
  std::vector<std::vector<Column>> options;  // every subset of {0..i}
  std::vector<Column> cur;
  i64 best = -1;
  std::vector<Column> best_cols;

  static bool better_witness(const Pyramid& cand, const Pyramid& held) {
    const bool ct = cand.is_top_segment(), ht = held.is_top_segment();
    if (ct != ht) return ct;
    if (!ct) return false;
    return cand.a_vector() < held.a_vector();
  }

  void run(int i, int left, i64 w) {
    if (i == c) {
      if (left != 0) return;
      if (w > best) {
        best = w;
        best_cols = cur;
      } else if (w == best && better_witness(Pyramid(c, cur), Pyramid(c, best_cols))) {
        best_cols = cur;
      }
      return;
    }
    for (const Column& s : options[i]) {
      const int def = i + 1 - static_cast<int>(s.size());
      if (def > left) continue;
      cur[i] = s;
      run(i + 1, left - def, w + column_weight(s));
    }
  }
};

}  // namespace

OracleResult brute_force_max_weight(int c, int d, OracleKind kind) {
  if (c < 1 || d < 1 || d > c) throw range_error("oracle needs 1 <= d <= c");
  if (kind == OracleKind::top_segment) {
    if (c > 9) throw range_error("top-segment oracle is capped at frame 9");
    TopSearch s{c, d, std::vector<int>(c), {}, -1};
    s.run(0, d, 0);
    return {s.best, Pyramid::from_top_segments(s.best_a)};
  }
  if (c > 5) throw range_error("full-subset oracle is capped at frame 5");
  SubsetSearch s{c, d, {}, std::vector<Column>(c), -1, {}};
  for (int i = 0; i < c; ++i) {
    std::vector<Column> opts;
    for (unsigned mask = 0; mask < (1u << (i + 1)); ++mask) {
      Column col;
      for (int k = 0; k <= i; ++k)
        if (mask & (1u << k)) col.push_back(k);
      opts.push_back(std::move(col));
    }
    s.options.push_back(std::move(opts));
  }
  s.run(0, d, 0);
  return {s.best, Pyramid(c, s.best_cols)};
}

bool endpoint_consistency(i64 c, i64 n) {
  if (n < 1) throw domain_error("seam check needs n >= 1");
  return closed_form_pronic(c, n, n) == closed_form_square(c, n, 0) &&
         closed_form_pronic(c, n - 1, 0) == closed_form_square(c, n, n);
}

}  // namespace stair
