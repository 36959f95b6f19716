#include "staircase/hilbert.hpp"

#include <charconv>

#include "staircase/error.hpp"

namespace stair {

namespace {

i64 ext(const std::vector<i64>& v, i64 n) {
  return n < static_cast<i64>(v.size()) ? v[n] : n + 1;
}

std::string render(const std::vector<i64>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

bool HilbertFunction::is_valid(const std::vector<i64>& diff) {
  const i64 len = static_cast<i64>(diff.size());
  i64 alpha = len;
  for (i64 n = 0; n < len; ++n) {
    if (diff[n] < 0 || diff[n] > n + 1) return false;
    if (alpha == len && diff[n] > 0) alpha = n;
  }
  for (i64 n = alpha; n < len; ++n)
    if (ext(diff, n) + 1 > ext(diff, n + 1)) return false;
  return true;
}

HilbertFunction::HilbertFunction(std::vector<i64> diff) {
  if (!is_valid(diff))
    throw invalid_hilbert_function("not a valid difference function: (" + render(diff) + ")");
  i64 reg = 0;
  while (ext(diff, reg) != reg + 1) ++reg;
  diff_.resize(static_cast<std::size_t>(reg) + 1);
  for (i64 n = 0; n <= reg; ++n) {
    diff_[n] = ext(diff, n);
    colength_ = checked::add(colength_, n + 1 - diff_[n]);
  }
}

HilbertFunction HilbertFunction::full() { return HilbertFunction(std::vector<i64>{1}); }

HilbertFunction HilbertFunction::of(const GradedMonomialIdeal& I) { return HilbertFunction(I.difference()); }

HilbertFunction HilbertFunction::parse(std::string_view text) {
  std::vector<i64> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    i64 value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw invalid_hilbert_function("cannot parse difference function \"" + std::string(text) + "\"");
    v.push_back(value);
    pos = comma + 1;
  }
  return HilbertFunction(std::move(v));
}

i64 HilbertFunction::diff_at(i64 n) const {
  if (n < 0) return 0;
  return ext(diff_, n);
}

i64 HilbertFunction::value(i64 n) const {
  if (n < 0) return 0;
  const i64 e = regularity();
  if (n >= e) return checked::sub(binom(n + 2, 2), colength_);
  i64 s = 0;
  for (i64 i = 0; i <= n; ++i) s += diff_[i];
  return s;
}

i64 HilbertFunction::alpha() const {
  for (std::size_t n = 0; n < diff_.size(); ++n)
    if (diff_[n] > 0) return static_cast<i64>(n);
  return regularity();
}

GradedMonomialIdeal HilbertFunction::lex_ideal() const {
  std::vector<Column> cols;
  const i64 e = regularity();
  for (i64 n = 0; n < e; ++n) {
    Column c(static_cast<std::size_t>(diff_[n]));
    for (i64 a = 0; a < diff_[n]; ++a) c[a] = static_cast<int>(a);
    cols.push_back(std::move(c));
  }
  return GradedMonomialIdeal(std::move(cols), static_cast<int>(e));
}

std::string HilbertFunction::str() const { return render(diff_); }

namespace {

void enumerate_from(i64 n, i64 prev, bool started, i64 left, std::vector<i64>& cur,
                    std::vector<HilbertFunction>& out) {
  const i64 lo = started ? prev + 1 : 0;
  for (i64 v = lo; v <= n + 1; ++v) {
    const i64 def = n + 1 - v;
    if (def > left) continue;
    cur.push_back(v);
    if (def == 0) {
      if (left == 0) out.emplace_back(cur);
    } else {
      enumerate_from(n + 1, v, started || v > 0, left - def, cur, out);
    }
    cur.pop_back();
  }
}

}  // namespace

std::vector<HilbertFunction> enumerate(i64 d) {
  if (d < 0) throw domain_error("colength must be nonnegative");
  std::vector<HilbertFunction> out;
  std::vector<i64> cur;
  enumerate_from(0, 0, false, d, cur, out);
  return out;
}

i64 g_star_sum(const HilbertFunction& phi) {
  const i64 d = phi.colength();
  i64 s = 0;
  for (i64 n = 0; n <= d; ++n) s = checked::add(s, phi.value(n));
  return checked::add(checked::sub(s, binom(d + 3, 3)), checked::add(checked::mul(d, d), 1));
}

i64 g_star_closed(const HilbertFunction& phi) {
  const i64 d = phi.colength();
  const i64 e = phi.regularity();
  i64 s = 0;
  for (i64 i = 0; i <= e - 2; ++i) s = checked::add(s, phi.value(i));
  return checked::add(checked::sub(s, binom(e + 1, 3)), checked::add(checked::mul(d, e - 2), 1));
}

i64 g_star(const HilbertFunction& phi) {
  const i64 a = g_star_sum(phi);
  const i64 b = g_star_closed(phi);
  if (a != b)
    throw internal_error("g* formulas disagree on (" + phi.str() + "): " + std::to_string(a) +
                         " vs " + std::to_string(b));
  return a;
}

i64 deformation_bound(i64 d) {
  if (d < 5) throw domain_error("deformation bound g(d) needs d >= 5, got " + std::to_string(d));
  if (d % 2 == 0) return checked::mul(d - 2, d - 2) / 4;
  return checked::mul(d - 1, d - 3) / 4;
}

GradedMonomialIdeal special_ideal(i64 d) {
  if (d < 5) throw domain_error("special ideal needs d >= 5, got " + std::to_string(d));
  if (d % 2 == 0) {
    const int e = static_cast<int>(d / 2 + 1);
    return GradedMonomialIdeal::from_generators({{2, 0}, {1, e - 2}, {0, e}});
  }
  const int e = static_cast<int>((d + 1) / 2);
  return GradedMonomialIdeal::from_generators({{2, 0}, {1, e - 1}, {0, e}});
}

HilbertFunction special_chi(i64 d) { return HilbertFunction::of(special_ideal(d)); }

DegreeGenus macaulay_to_dg(MacaulayCoefficients mc) {
  if (mc.a < 4 || mc.b < mc.a)
    throw domain_error("Macaulay coefficients need 4 <= a <= b, got (" + std::to_string(mc.a) + "," +
                       std::to_string(mc.b) + ")");
  const i64 d = mc.a - 1;
  const i64 g = checked::sub(checked::add(checked::sub(checked::mul(mc.a, mc.a), 3 * mc.a), 4) / 2, mc.b);
  return {d, g};
}

MacaulayCoefficients dg_to_macaulay(DegreeGenus dg) {
  const i64 a = dg.d + 1;
  const i64 b = checked::sub(checked::add(checked::sub(checked::mul(a, a), 3 * a), 4) / 2, dg.g);
  if (a < 4 || b < a)
    throw domain_error("(d,g) = (" + std::to_string(dg.d) + "," + std::to_string(dg.g) +
                       ") has no Macaulay coefficients with 4 <= a <= b");
  return {a, b};
}

std::string to_string(Order o) {
  switch (o) {
    case Order::less: return "less";
    case Order::equal: return "equal";
    case Order::greater: return "greater";
    case Order::incomparable: return "incomparable";
  }
  return "?";
}

Order compare(const HilbertFunction& phi, const HilbertFunction& psi) {
  if (phi.colength() != psi.colength())
    throw domain_error("compare needs equal colengths, got " + std::to_string(phi.colength()) + " and " +
                       std::to_string(psi.colength()));
  bool lt = false, gt = false;
  const i64 top = std::max(phi.regularity(), psi.regularity());
  for (i64 n = 0; n <= top; ++n) {
    const i64 a = phi.value(n), b = psi.value(n);
    lt |= a < b;
    gt |= a > b;
  }
  if (lt && gt) return Order::incomparable;
  if (lt) return Order::less;
  if (gt) return Order::greater;
  return Order::equal;
}

}  // namespace stair
