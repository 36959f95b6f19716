#include "staircase/ideal.hpp"

#include <algorithm>
#include <json.hpp>

#include "staircase/error.hpp"

namespace stair {

namespace {

Column full_column(int n) {
  Column c(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) c[a] = a;
  return c;
}

bool is_full(const Column& c, int n) { return static_cast<int>(c.size()) == n + 1; }

// Everything column n forces into column n+1 (x- and y-multiples).
Column forced_successor(const Column& c) {
  Column out;
  out.reserve(c.size() + 1);
  for (int a : c) {
    if (out.empty() || out.back() < a) out.push_back(a);
    out.push_back(a + 1);
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

GradedMonomialIdeal::GradedMonomialIdeal(std::vector<Column> columns, int stable_from)
    : columns_(std::move(columns)), stable_from_(stable_from) {
  if (stable_from_ < 0) throw malformed_ideal("stable_from must be nonnegative");
  for (std::size_t n = 0; n < columns_.size(); ++n) {
    const Column& c = columns_[n];
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] > static_cast<int>(n))
        throw malformed_ideal("column " + std::to_string(n) + " holds y-exponent " +
                              std::to_string(c[i]) + " outside [0," + std::to_string(n) + "]");
      if (i > 0 && c[i - 1] >= c[i])
        throw malformed_ideal("column " + std::to_string(n) + " is not strictly increasing");
    }
    if (static_cast<int>(n) >= stable_from_ && !is_full(c, static_cast<int>(n)))
      throw malformed_ideal("column " + std::to_string(n) + " is at or past stable_from " +
                            std::to_string(stable_from_) + " but not full");
  }
  for (std::size_t n = 0; n + 1 < columns_.size(); ++n) {
    const Column need = forced_successor(columns_[n]);
    const Column& next = columns_[n + 1];
    if (!std::includes(next.begin(), next.end(), need.begin(), need.end()))
      throw malformed_ideal("growth fails between degrees " + std::to_string(n) + " and " +
                            std::to_string(n + 1));
  }
}

GradedMonomialIdeal GradedMonomialIdeal::full() { return GradedMonomialIdeal({}, 0); }

GradedMonomialIdeal GradedMonomialIdeal::from_generators(const std::vector<XYMonomial>& gens) {
  int x_pure = -1, y_pure = -1;
  for (auto g : gens) {
    if (g.a < 0 || g.b < 0) throw malformed_ideal("negative generator exponent");
    if (g.b == 0 && (x_pure < 0 || g.a < x_pure)) x_pure = g.a;
    if (g.a == 0 && (y_pure < 0 || g.b < y_pure)) y_pure = g.b;
  }
  if (x_pure < 0 || y_pure < 0)
    throw malformed_ideal("generators need a pure x-power and a pure y-power for finite colength");
  std::vector<Column> cols;
  for (int n = 0;; ++n) {
    Column c;
    for (int a = 0; a <= n; ++a) {
      for (auto g : gens) {
        if (g.a <= n - a && g.b <= a) {
          c.push_back(a);
          break;
        }
      }
    }
    if (is_full(c, n)) return GradedMonomialIdeal(std::move(cols), n);
    cols.push_back(std::move(c));
  }
}

GradedMonomialIdeal GradedMonomialIdeal::from_partition(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw malformed_ideal("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw malformed_ideal("partition must be nonincreasing");
  }
  const int len = static_cast<int>(parts.size());
  std::vector<Column> cols;
  for (int n = 0;; ++n) {
    Column c;
    for (int a = 0; a <= n; ++a) {
      const int i = n - a;
      if (!(i < len && a < parts[i])) c.push_back(a);
    }
    if (is_full(c, n)) return GradedMonomialIdeal(std::move(cols), n);
    cols.push_back(std::move(c));
  }
}

Column GradedMonomialIdeal::column(int n) const {
  if (n < 0) return {};
  if (n < static_cast<int>(columns_.size())) return columns_[n];
  return full_column(n);
}

int GradedMonomialIdeal::column_size(int n) const {
  if (n < 0) return 0;
  if (n < static_cast<int>(columns_.size())) return static_cast<int>(columns_[n].size());
  return n + 1;
}

bool GradedMonomialIdeal::contains(int n, int a) const {
  if (n < 0 || a < 0 || a > n) return false;
  if (n >= static_cast<int>(columns_.size())) return true;
  const Column& c = columns_[n];
  return std::binary_search(c.begin(), c.end(), a);
}

i64 GradedMonomialIdeal::colength() const {
  i64 d = 0;
  for (std::size_t n = 0; n < columns_.size(); ++n)
    d = checked::add(d, static_cast<i64>(n) + 1 - static_cast<i64>(columns_[n].size()));
  return d;
}

int GradedMonomialIdeal::first_full() const {
  for (std::size_t n = 0; n < columns_.size(); ++n)
    if (is_full(columns_[n], static_cast<int>(n))) return static_cast<int>(n);
  return static_cast<int>(columns_.size());
}

std::vector<i64> GradedMonomialIdeal::difference() const {
  const int e = first_full();
  std::vector<i64> out(static_cast<std::size_t>(e) + 1);
  for (int n = 0; n <= e; ++n) out[n] = column_size(n);
  return out;
}

bool GradedMonomialIdeal::is_borel_fixed() const {
  // y -> x moves stay inside the ideal iff every column is an initial segment;
  // z -> y moves are already implied by growth.
  for (const Column& c : columns_)
    if (!c.empty() && c.back() != static_cast<int>(c.size()) - 1) return false;
  return true;
}

GradedMonomialIdeal GradedMonomialIdeal::borel_closure() const {
  std::vector<Column> cols;
  cols.reserve(columns_.size());
  for (const Column& c : columns_) {
    Column out;
    if (!c.empty())
      for (int a = 0; a <= c.back(); ++a) out.push_back(a);
    cols.push_back(std::move(out));
  }
  return GradedMonomialIdeal(std::move(cols), stable_from_).canonical();
}

std::vector<XYMonomial> GradedMonomialIdeal::minimal_generators() const {
  std::vector<XYMonomial> gens;
  const int e = first_full();
  for (int n = 0; n <= e; ++n) {
    for (int a : column(n)) {
      const bool via_x = contains(n - 1, a);
      const bool via_y = contains(n - 1, a - 1);
      if (!via_x && !via_y) gens.push_back({n - a, a});
    }
  }
  return gens;
}

GradedMonomialIdeal GradedMonomialIdeal::canonical() const {
  const int e = first_full();
  std::vector<Column> cols(columns_.begin(), columns_.begin() + std::min<std::size_t>(e, columns_.size()));
  return GradedMonomialIdeal(std::move(cols), e);
}

bool GradedMonomialIdeal::same_ideal(const GradedMonomialIdeal& o) const {
  return canonical() == o.canonical();
}

std::string GradedMonomialIdeal::to_json() const {
  nlohmann::json j;
  j["columns"] = columns_;
  j["stable_from"] = stable_from_;
  return j.dump();
}

GradedMonomialIdeal GradedMonomialIdeal::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw malformed_ideal(std::string("ideal JSON does not parse: ") + e.what());
  }
  if (!j.is_object()) throw malformed_ideal("ideal JSON must be an object");
  if (!j.contains("stable_from"))
    throw malformed_ideal("ideal JSON lacks stable_from; the column sequence would not terminate");
  if (!j.contains("columns")) throw malformed_ideal("ideal JSON lacks columns");
  try {
    return GradedMonomialIdeal(j.at("columns").get<std::vector<Column>>(), j.at("stable_from").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw malformed_ideal(std::string("ideal JSON has the wrong shape: ") + e.what());
  }
}

namespace {

// Depth-first search over columns. `size_of(n)` returns the required column
// size in degree n, or -1 when any size is allowed (then the deficiency
// budget bounds the search).
class ColumnSearch {
 public:
  ColumnSearch(i64 budget, std::function<int(int)> size_of)
      : budget_(budget), size_of_(std::move(size_of)) {}

  std::vector<GradedMonomialIdeal> run() {
    step(0, {}, 0);
    return std::move(out_);
  }

 private:
  void step(int n, const Column& prev, i64 used) {
    Column forced = n == 0 ? Column{} : forced_successor(prev);
    Column free;
    for (int a = 0, i = 0; a <= n; ++a) {
      if (i < static_cast<int>(forced.size()) && forced[i] == a) {
        ++i;
        continue;
      }
      free.push_back(a);
    }
    const int want = size_of_(n);
    const int base = static_cast<int>(forced.size());
    int kmin = 0, kmax = static_cast<int>(free.size());
    if (want >= 0) {
      kmin = kmax = want - base;
      if (kmin < 0 || kmin > static_cast<int>(free.size())) return;
    } else {
      // deficiency n+1-base-k must not exceed what is left
      kmin = std::max<i64>(0, static_cast<i64>(n) + 1 - base - (budget_ - used));
      if (kmin > kmax) return;
    }
    for (int k = kmin; k <= kmax; ++k) {
      std::vector<int> pick(k);
      choose(free, 0, k, pick, 0, [&](const std::vector<int>& chosen) {
        Column col = forced;
        col.insert(col.end(), chosen.begin(), chosen.end());
        std::sort(col.begin(), col.end());
        const i64 def = static_cast<i64>(n) + 1 - static_cast<i64>(col.size());
        const i64 total = used + def;
        if (total > budget_) return;
        if (def == 0) {
          if (total == budget_) out_.emplace_back(cols_, n);
          return;
        }
        cols_.push_back(col);
        step(n + 1, col, total);
        cols_.pop_back();
      });
    }
  }

  template <class F>
  void choose(const std::vector<int>& from, std::size_t start, int k, std::vector<int>& pick, int filled, F&& f) {
    if (filled == k) {
      f(pick);
      return;
    }
    for (std::size_t i = start; i + (k - filled) <= from.size(); ++i) {
      pick[filled] = from[i];
      choose(from, i + 1, k, pick, filled + 1, f);
    }
  }

  i64 budget_;
  std::function<int(int)> size_of_;
  std::vector<Column> cols_;
  std::vector<GradedMonomialIdeal> out_;
};

}  // namespace

std::vector<GradedMonomialIdeal> enumerate_ideals(i64 d) {
  if (d < 0) throw domain_error("colength must be nonnegative");
  return ColumnSearch(d, [](int) { return -1; }).run();
}

std::vector<GradedMonomialIdeal> ideals_with_difference(const std::vector<i64>& diff) {
  i64 d = 0;
  for (std::size_t n = 0; n < diff.size(); ++n) {
    if (diff[n] < 0 || diff[n] > static_cast<i64>(n) + 1) return {};
    d += static_cast<i64>(n) + 1 - diff[n];
  }
  return ColumnSearch(d, [&diff](int n) {
           return n < static_cast<int>(diff.size()) ? static_cast<int>(diff[n]) : n + 1;
         }).run();
}

}  // namespace stair
