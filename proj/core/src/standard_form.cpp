#include "staircase/standard_form.hpp"

#include "staircase/error.hpp"

namespace stair {

char letter_char(Letter l) { return l == Letter::x ? 'x' : 'y'; }

std::string TypeChain::str() const {
  std::string s = "r=" + std::to_string(r()) + "; ells=";
  if (ells.empty()) s += "-";
  for (std::size_t i = 0; i < ells.size(); ++i) {
    if (i) s += ',';
    s += letter_char(ells[i]);
  }
  s += "; ms=";
  if (ms.empty()) s += "-";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ms[i]);
  }
  s += "; c=" + std::to_string(kernel_c) + "; kappa=" + std::to_string(kernel_kappa);
  return s;
}

std::optional<Decomposition> decompose(const HilbertFunction& phi) {
  const i64 d = phi.colength();
  if (d <= 4) return std::nullopt;
  if (g_star(phi) <= deformation_bound(d)) return std::nullopt;
  const i64 m = phi.regularity();
  std::vector<i64> kd;
  for (i64 n = 0; n <= m - 2; ++n) kd.push_back(phi.diff_at(n + 1));
  std::optional<HilbertFunction> psi;
  try {
    psi.emplace(std::move(kd));
  } catch (const invalid_hilbert_function& e) {
    throw internal_error("kernel of (" + phi.str() + ") is not a Hilbert function: " + e.what());
  }
  if (psi->colength() != d - m)
    throw internal_error("kernel of (" + phi.str() + ") has colength " + std::to_string(psi->colength()) +
                         ", expected " + std::to_string(d - m));
  for (i64 n = 0; n < m; ++n)
    if (phi.diff_at(n) != psi->diff_at(n - 1))
      throw internal_error("kernel of (" + phi.str() + ") does not glue back");
  return Decomposition{*psi, m};
}

HilbertFunction compose(const HilbertFunction& psi, i64 m) {
  if (m < psi.regularity() + 2)
    throw domain_error("compose needs m >= reg(psi)+2 = " + std::to_string(psi.regularity() + 2) + ", got " +
                       std::to_string(m));
  std::vector<i64> diff;
  for (i64 n = 0; n < m; ++n) diff.push_back(psi.diff_at(n - 1));
  diff.push_back(m + 1);
  HilbertFunction phi(std::move(diff));
  const i64 c = psi.colength();
  const i64 expect = checked::add(checked::add(g_star(psi), checked::mul(m, m - 3) / 2), c);
  if (g_star(phi) != expect)
    throw internal_error("gluing identity fails for m=" + std::to_string(m) + " over (" + psi.str() + ")");
  if (phi.colength() != c + m || phi.regularity() != m)
    throw internal_error("glued function has the wrong colength or regularity");
  return phi;
}

TypeChain type_of(const HilbertFunction& phi) {
  TypeChain chain;
  HilbertFunction cur = phi;
  while (auto dec = decompose(cur)) {
    chain.ms.push_back(dec->m);
    chain.ds.push_back(cur.colength());
    cur = dec->kernel;
  }
  chain.kernel_c = cur.colength();
  chain.kernel_kappa = cur.regularity();
  return chain;
}

std::vector<std::string> chain_violations(const TypeChain& chain) {
  std::vector<std::string> out;
  const int r = chain.r();
  if (r < 0) return out;
  const i64 c = chain.kernel_c;
  i64 tail = c;
  for (int i = r; i >= 0; --i) {
    const i64 below = tail;  // colength of level i+1 (the kernel when i == r)
    tail += chain.ms[i];
    if (i < static_cast<int>(chain.ds.size()) && chain.ds[i] != tail)
      out.push_back("d_" + std::to_string(i) + "=" + std::to_string(chain.ds[i]) + " but c+m_r+..+m_i=" +
                    std::to_string(tail));
    if (chain.ms[i] < below + 2)
      out.push_back("m_" + std::to_string(i) + "=" + std::to_string(chain.ms[i]) + " < colength below + 2 = " +
                    std::to_string(below + 2));
  }
  if (chain.ms[0] < checked::mul(ipow(2, r), c + 2))
    out.push_back("m_0=" + std::to_string(chain.ms[0]) + " < 2^r(c+2)=" + std::to_string(ipow(2, r) * (c + 2)));
  for (int i = 0; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      if (!(chain.ms[j] + j < chain.ms[i] + i - 1))
        out.push_back("m_" + std::to_string(j) + "+" + std::to_string(j) + " >= m_" + std::to_string(i) + "+" +
                      std::to_string(i) + "-1");
  return out;
}

std::vector<int> iota_table(const std::vector<Letter>& ells) {
  std::vector<int> t(ells.size() + 1, 0);
  for (std::size_t i = 0; i < ells.size(); ++i) t[i + 1] = t[i] + (ells[i] == Letter::y ? 1 : 0);
  return t;
}

std::vector<Markers> marker_monomials(const TypeChain& chain) {
  const int r = chain.r();
  if (r < 0) throw domain_error("markers need a chain of type r >= 0");
  if (static_cast<int>(chain.ells.size()) != r + 1)
    throw domain_error("markers need the letters l_0..l_r; the chain carries " + std::to_string(chain.ells.size()));
  const auto iota = iota_table(chain.ells);
  const i64 m0 = chain.ms[0];
  std::vector<Markers> out;
  for (int i = 0; i <= r; ++i) {
    const i64 mi = chain.ms[i];
    const i64 io = iota[i];
    const i64 ez = m0 - mi - i;
    auto mono = [&](i64 ex, i64 ey, i64 ezz, const char* name) {
      if (ex < 0 || ey < 0 || ezz < 0)
        throw marker_undefined(std::string(name) + "_" + std::to_string(i) + " has a negative exponent (" +
                               std::to_string(ex) + "," + std::to_string(ey) + "," + std::to_string(ezz) + ")");
      return Monomial(static_cast<int>(ex), static_cast<int>(ey), static_cast<int>(ezz));
    };
    const i64 ux = i - io, uy = mi + io;
    const i64 dx = mi + i - io, dy = io;
    out.push_back(Markers{
        mono(ux, uy, ez, "M_up"),
        mono(dx, dy, ez, "M_down"),
        mono(ux, uy - 1, ez + 1, "N_up"),
        mono(dx - 1, dy, ez + 1, "N_down"),
        mono(ux, uy - 2, ez + 2, "E_up"),
        mono(dx - 2, dy, ez + 2, "E_down"),
    });
  }
  return out;
}

std::string to_string(StandardForm::Kind k) {
  switch (k) {
    case StandardForm::Kind::none: return "none";
    case StandardForm::Kind::x_form: return "x_form";
    case StandardForm::Kind::y_form: return "y_form";
  }
  return "?";
}

GradedMonomialIdeal standard_form_ideal(Letter l, const GradedMonomialIdeal& K, i64 m) {
  if (m < 1) throw domain_error("standard form needs m >= 1");
  const int top = std::max<int>(static_cast<int>(m), K.first_full() + 1);
  std::vector<Column> cols;
  for (int n = 0; n <= top; ++n) {
    Column c;
    for (int a = 0; a <= n; ++a) {
      bool in;
      if (l == Letter::y)
        in = (a >= 1 && K.contains(n - 1, a - 1)) || (a == 0 && n >= m);
      else
        in = (a <= n - 1 && K.contains(n - 1, a)) || (a == n && n >= m);
      if (in) c.push_back(a);
    }
    cols.push_back(std::move(c));
  }
  return GradedMonomialIdeal(std::move(cols), top).canonical();
}

StandardForm detect_standard_form(const GradedMonomialIdeal& I) {
  StandardForm none;
  const i64 d = I.colength();
  if (d < 5) return none;
  const HilbertFunction phi = HilbertFunction::of(I);
  if (g_star(phi) <= deformation_bound(d)) return none;
  const int m = static_cast<int>(phi.regularity());

  int first_x = 0, first_y = 0;
  while (!I.contains(first_x, 0)) ++first_x;
  while (!I.contains(first_y, first_y)) ++first_y;
  const bool y_form = first_x == m;
  const bool x_form = first_y == m;
  if (x_form && y_form)
    throw internal_error("ideal has both an x- and a y-standard form");
  if (!x_form && !y_form) return none;

  std::vector<Column> kcols;
  for (int j = 0; j < m; ++j) {
    Column c;
    for (int a : I.column(j + 1)) {
      if (y_form && a >= 1) c.push_back(a - 1);
      if (x_form && a <= j) c.push_back(a);
    }
    kcols.push_back(std::move(c));
  }
  GradedMonomialIdeal K = GradedMonomialIdeal(std::move(kcols), m).canonical();
  const Letter l = y_form ? Letter::y : Letter::x;
  if (!standard_form_ideal(l, K, m).same_ideal(I))
    throw internal_error("standard form does not reassemble the ideal");
  if (K.colength() != d - m) throw internal_error("kernel colength does not telescope");
  StandardForm out;
  out.kind = y_form ? StandardForm::Kind::y_form : StandardForm::Kind::x_form;
  out.kernel = std::move(K);
  out.m = m;
  return out;
}

TypeChain ideal_type_chain(const GradedMonomialIdeal& I) {
  TypeChain chain;
  GradedMonomialIdeal cur = I;
  for (;;) {
    StandardForm sf = detect_standard_form(cur);
    if (sf.kind == StandardForm::Kind::none) break;
    chain.ells.push_back(sf.kind == StandardForm::Kind::y_form ? Letter::y : Letter::x);
    chain.ms.push_back(sf.m);
    chain.ds.push_back(cur.colength());
    cur = *sf.kernel;
  }
  chain.kernel_c = cur.colength();
  chain.kernel_kappa = HilbertFunction::of(cur).regularity();
  return chain;
}

}  // namespace stair
