#include "mmpa/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace mmpa {

Shape::Shape(std::initializer_list<int> parts) : Shape(std::vector<int>(parts)) {}

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("shape parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("shape parts must weakly decrease");
  }
}

int Shape::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Shape Shape::tail() const {
  if (parts_.empty()) return {};
  return Shape(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::vector<Shape> partitions_of(int n) {
  std::vector<Shape> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool shape_dominates(const Shape& lambda, const Shape& mu) {
  int sl = 0, sm = 0;
  for (int i = 0; i < std::max(lambda.rows(), mu.rows()); ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sl < sm) return false;
  }
  return true;
}

Tableau::Tableau(std::vector<std::vector<Multiset>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t i = 1; i < rows_.size(); ++i)
    if (rows_[i].size() > rows_[i - 1].size() || rows_[i].empty())
      throw std::invalid_argument("tableau rows must weakly decrease in length");
}

Shape Tableau::shape() const {
  std::vector<int> p;
  for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
  return Shape(p);
}

int Tableau::column_height(int j) const {
  int h = 0;
  while (h < num_rows() && row_length(h) > j) ++h;
  return h;
}

int Tableau::size() const { return shape().size(); }

int Tableau::empty_count() const {
  int n = 0;
  for (const auto& r : rows_)
    for (const auto& c : r)
      if (c.empty()) ++n;
  return n;
}

std::vector<Multiset> Tableau::content() const {
  std::vector<Multiset> out;
  for (const auto& r : rows_)
    for (const auto& c : r)
      if (!c.empty()) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Row/column conditions over nonempty boxes. strict: strict increase
// everywhere; otherwise weak increase with the two parity repeat rules.
bool order_conditions(const Tableau& t, bool strict) {
  auto ok = [&](const Multiset& lo, const Multiset& hi, bool in_row) {
    auto c = lo <=> hi;
    if (c > 0) return false;
    if (c == 0) {
      if (strict) return false;
      // Equal odd blocks may not share a row; equal even ones not a column.
      if (in_row && lo.parity() == 1) return false;
      if (!in_row && lo.parity() == 0) return false;
    }
    return true;
  };
  for (int i = 0; i < t.num_rows(); ++i) {
    const Multiset* prev = nullptr;
    for (const auto& c : t.rows()[i]) {
      if (c.empty()) continue;
      if (prev && !ok(*prev, c, true)) return false;
      prev = &c;
    }
  }
  for (int j = 0; j < t.row_length(0); ++j) {
    const Multiset* prev = nullptr;
    for (int i = 0; i < t.column_height(j); ++i) {
      const auto& c = t.at(i, j);
      if (c.empty()) continue;
      if (prev && !ok(*prev, c, false)) return false;
      prev = &c;
    }
  }
  // A repeated even block anywhere in one column, or odd anywhere in one row.
  if (!strict) {
    for (int i = 0; i < t.num_rows(); ++i) {
      std::set<Multiset> seen;
      for (const auto& c : t.rows()[i])
        if (!c.empty() && c.parity() == 1 && !seen.insert(c).second) return false;
    }
    for (int j = 0; j < t.row_length(0); ++j) {
      std::set<Multiset> seen;
      for (int i = 0; i < t.column_height(j); ++i) {
        const auto& c = t.at(i, j);
        if (!c.empty() && c.parity() == 0 && !seen.insert(c).second) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_multiset_tableau(const Tableau& t) {
  if (t.num_rows() == 0) return true;
  int lambda2 = t.row_length(1);
  int prefix = 0;
  while (prefix < t.row_length(0) && t.at(0, prefix).empty()) ++prefix;
  if (prefix < lambda2) return false;
  for (int i = 0; i < t.num_rows(); ++i)
    for (int j = (i == 0 ? prefix : 0); j < t.row_length(i); ++j) {
      const auto& c = t.at(i, j);
      if (c.empty() || c.has_underlined() || c.has_repeated_barred()) return false;
    }
  return true;
}

TableauClass classify(const Tableau& t) {
  TableauClass k;
  if (!is_multiset_tableau(t)) return k;
  k.mt = true;
  // SMT: content a set partition of [r].
  std::vector<int> values;
  bool all_plain = true;
  bool singletons = true;
  for (const auto& c : t.content()) {
    if (c.size() != 1) singletons = false;
    for (const auto& [s, m] : c.entries()) {
      if (s.barred) all_plain = false;
      for (int i = 0; i < m; ++i) values.push_back(s.value);
    }
  }
  std::sort(values.begin(), values.end());
  bool is_set = all_plain;
  for (std::size_t i = 0; i < values.size() && is_set; ++i)
    if (values[i] != static_cast<int>(i) + 1) is_set = false;
  k.smt = is_set && order_conditions(t, true);
  k.ssmt = order_conditions(t, false);
  k.ssmt_prime = k.ssmt && singletons;
  return k;
}

bool is_ssst(const Tableau& t) {
  for (const auto& r : t.rows())
    for (const auto& c : r)
      if (c.empty()) return false;
  return order_conditions(t, false);
}

bool is_syt(const Tableau& t) {
  std::vector<int> v;
  for (const auto& r : t.rows())
    for (const auto& c : r) {
      if (c.size() != 1 || c.max().alphabet() != 0) return false;
      v.push_back(c.max().value);
    }
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != static_cast<int>(i) + 1) return false;
  return order_conditions(t, true);
}

bool is_ssyt(const Tableau& t) {
  for (const auto& r : t.rows())
    for (const auto& c : r)
      if (c.size() != 1 || c.max().alphabet() != 0) return false;
  return order_conditions(t, false);
}

ColoringMap coloring_of(const Tableau& t) {
  Multiset all;
  for (const auto& c : t.content()) all = all + c;
  Profile p = profile_of(all);
  return ColoringMap(p.a, p.b);
}

Tableau color_tableau(const ColoringMap& kappa, const Tableau& t) {
  auto rows = t.rows();
  for (auto& r : rows)
    for (auto& c : r) {
      Multiset m;
      for (Letter x : c.letters()) m.insert(kappa.color(x));
      c = m;
    }
  return Tableau(rows);
}

Tableau standardize_tableau(const Tableau& t) {
  ColoringMap kappa = coloring_of(t);
  std::map<Letter, std::vector<int>> fibers;
  std::map<Letter, std::size_t> counter;
  // Boxes grouped by content.
  std::map<Multiset, std::vector<std::pair<int, int>>> boxes;
  for (int i = 0; i < t.num_rows(); ++i)
    for (int j = 0; j < t.row_length(i); ++j)
      if (!t.at(i, j).empty()) boxes[t.at(i, j)].push_back({i, j});
  auto rows = t.rows();
  for (auto& [content, cells] : boxes) {
    // Even blocks fill left to right; odd blocks right to left; bottom first.
    bool odd = content.parity() == 1;
    std::sort(cells.begin(), cells.end(), [odd](auto x, auto y) {
      if (x.second != y.second) return odd ? x.second > y.second : x.second < y.second;
      return x.first < y.first;
    });
    for (auto [i, j] : cells) {
      Multiset out;
      for (Letter x : content.letters()) {
        if (!fibers.count(x)) fibers[x] = kappa.fiber(x);
        out.insert(plain(fibers[x].at(counter[x]++)));
      }
      rows[i][j] = out;
    }
  }
  return Tableau(rows);
}

std::vector<std::pair<Multiset, WeakComposition>> alpha_sequences(const Tableau& t) {
  auto content = t.content();
  content.erase(std::unique(content.begin(), content.end()), content.end());
  int cols = t.row_length(0);
  std::vector<std::pair<Multiset, WeakComposition>> out;
  for (const auto& b : content) {
    std::vector<int> alpha(cols, 0);
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < t.column_height(j); ++i)
        if (t.at(i, j) <= b) ++alpha[j];
    out.push_back({b, WeakComposition(alpha)});
  }
  return out;
}

Dominance col_dominance_cmp(const Tableau& s, const Tableau& t) {
  if (s.content() != t.content()) throw std::invalid_argument("col_dominance_cmp: content mismatch");
  if (s == t) return Dominance::Equal;
  auto as = alpha_sequences(s), at = alpha_sequences(t);
  std::size_t cols = std::max(s.row_length(0), t.row_length(0));
  bool le = true, ge = true, same = true;
  for (std::size_t k = 0; k < as.size(); ++k) {
    auto pa = as[k].second.parts(), pb = at[k].second.parts();
    pa.resize(cols, 0);
    pb.resize(cols, 0);
    WeakComposition x(pa), y(pb);
    if (x != y) same = false;
    if (!dominance_leq(x, y)) le = false;
    if (!dominance_leq(y, x)) ge = false;
  }
  if (same) return Dominance::Incomparable;
  if (le) return Dominance::Less;
  if (ge) return Dominance::Greater;
  return Dominance::Incomparable;
}

// ---- enumeration ----

namespace {

// Backtracking over cells in row-major order (bottom row first), drawing from
// a pool of letters with multiplicities.
void fill_ssst(const Shape& shape, std::vector<std::pair<Multiset, int>>& pool,
               std::vector<std::vector<Multiset>>& rows, int i, int j, std::vector<Tableau>& out) {
  if (i == shape.rows()) {
    out.emplace_back(rows);
    return;
  }
  int ni = i, nj = j + 1;
  if (nj == shape[i]) {
    ni = i + 1;
    nj = 0;
  }
  for (auto& [letter, count] : pool) {
    if (count == 0) continue;
    if (j > 0) {
      auto c = rows[i][j - 1] <=> letter;
      if (c > 0 || (c == 0 && letter.parity() == 1)) continue;
    }
    if (i > 0) {
      auto c = rows[i - 1][j] <=> letter;
      if (c > 0 || (c == 0 && letter.parity() == 0)) continue;
    }
    --count;
    rows[i][j] = letter;
    fill_ssst(shape, pool, rows, ni, nj, out);
    ++count;
  }
}

std::vector<std::pair<Multiset, int>> make_pool(const std::vector<Multiset>& letters) {
  std::map<Multiset, int> m;
  for (const auto& x : letters) ++m[x];
  return {m.begin(), m.end()};
}

}  // namespace

std::vector<Tableau> enumerate_ssst(const Shape& shape, const std::vector<Multiset>& letters) {
  if (shape.size() != static_cast<int>(letters.size())) return {};
  if (shape.size() > 12) throw ResourceError("enumerate_ssst: shape too large");
  auto pool = make_pool(letters);
  std::vector<std::vector<Multiset>> rows;
  for (int p : shape.parts()) rows.emplace_back(p);
  std::vector<Tableau> out;
  if (shape.rows() == 0) return {Tableau()};
  fill_ssst(shape, pool, rows, 0, 0, out);
  return out;
}

std::vector<Tableau> enumerate_syt(const Shape& shape) {
  std::vector<Multiset> letters;
  for (int v = 1; v <= shape.size(); ++v) letters.push_back(Multiset{plain(v)});
  return enumerate_ssst(shape, letters);
}

std::vector<Tableau> enumerate_ssyt(const Shape& shape, int max_entry) {
  if (shape.size() > 10 || max_entry > 10) throw ResourceError("enumerate_ssyt: too large");
  std::vector<Tableau> out;
  std::vector<std::vector<Multiset>> rows;
  for (int p : shape.parts()) rows.emplace_back(p);
  if (shape.rows() == 0) return {Tableau()};
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == shape.rows()) {
      out.emplace_back(rows);
      return;
    }
    int ni = i, nj = j + 1;
    if (nj == shape[i]) {
      ni = i + 1;
      nj = 0;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[i][j - 1].max().value);
    if (i > 0) lo = std::max(lo, rows[i - 1][j].max().value + 1);
    for (int v = lo; v <= max_entry; ++v) {
      rows[i][j] = Multiset{plain(v)};
      rec(ni, nj);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<MultisetPartition> content_partitions(const WeakComposition& a, const WeakComposition& b) {
  ColoringMap kappa(a, b);
  int n = kappa.size();
  if (n > 6) throw ResourceError("content_partitions: |a|+|b| > 6");
  std::set<MultisetPartition> seen;
  for (const auto& rgs : restricted_growth_strings(n)) {
    int nb = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<Multiset> blocks(nb);
    for (int i = 0; i < n; ++i) blocks[rgs[i]].insert(kappa.color(i + 1));
    MultisetPartition p(blocks);
    if (p.valid()) seen.insert(p);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Tableau> enumerate_ssmt(const Shape& lambda, const WeakComposition& a, const WeakComposition& b) {
  if (a.total() + b.total() > 6) throw ResourceError("enumerate_ssmt: |a|+|b| > 6");
  Shape mu = lambda.tail();
  int m = mu.size();
  int row1 = lambda[0];
  std::set<Tableau> out;
  for (const auto& content : content_partitions(a, b)) {
    // Distinct blocks with multiplicities; choose how many copies go above row 1.
    std::vector<std::pair<Multiset, int>> distinct;
    for (const auto& bl : content.blocks()) {
      if (!distinct.empty() && distinct.back().first == bl)
        ++distinct.back().second;
      else
        distinct.push_back({bl, 1});
    }
    int nb = content.num_blocks();
    if (nb - m < 0 || row1 - (nb - m) < lambda[1]) continue;
    std::vector<int> take(distinct.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
      if (k == distinct.size()) {
        if (left != 0) return;
        std::vector<Multiset> upper, lower;
        for (std::size_t q = 0; q < distinct.size(); ++q) {
          for (int c = 0; c < take[q]; ++c) upper.push_back(distinct[q].first);
          int rest = distinct[q].second - take[q];
          if (rest > 1 && distinct[q].first.parity() == 1) return;
          for (int c = 0; c < rest; ++c) lower.push_back(distinct[q].first);
        }
        std::vector<Multiset> first(row1 - static_cast<int>(lower.size()));
        first.insert(first.end(), lower.begin(), lower.end());
        for (const auto& up : enumerate_ssst(mu, upper)) {
          std::vector<std::vector<Multiset>> rows{first};
          for (const auto& r : up.rows()) rows.push_back(r);
          out.insert(Tableau(rows));
        }
        return;
      }
      for (int c = 0; c <= std::min(left, distinct[k].second); ++c) {
        take[k] = c;
        rec(k + 1, left - c);
      }
      take[k] = 0;
    };
    rec(0, m);
  }
  return {out.begin(), out.end()};
}

std::vector<Tableau> enumerate_smt(const Shape& lambda, int r) {
  return enumerate_ssmt(lambda, WeakComposition(std::vector<int>(r, 1)), WeakComposition());
}

std::map<Shape, std::vector<Tableau>> ssmt_by_shape(const WeakComposition& a, const WeakComposition& b, int n) {
  int total = a.total() + b.total();
  std::map<Shape, std::vector<Tableau>> out;
  for (int m = 0; m <= total; ++m) {
    for (const auto& mu : partitions_of(m)) {
      if (n - m < mu[0]) continue;
      std::vector<int> parts;
      if (n - m > 0) parts.push_back(n - m);
      parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
      Shape lambda(parts);
      auto ts = enumerate_ssmt(lambda, a, b);
      if (!ts.empty()) out[lambda] = std::move(ts);
    }
  }
  return out;
}

std::vector<Tableau> enumerate_ssmt_prime(const Shape& lambda, const WeakComposition& a, const WeakComposition& b) {
  std::vector<Multiset> letters;
  for (Letter x : ground_multiset(a, b, false).letters()) letters.push_back(Multiset{x});
  return enumerate_ssst(lambda, letters);
}

}  // namespace mmpa
