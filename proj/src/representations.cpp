#include "mmpa/representations.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mmpa/linalg.hpp"

namespace mmpa {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

using Rows = std::vector<std::vector<Multiset>>;

int sort_with_sign(std::vector<Multiset>& v) {
  int sign = 1;
  // Insertion sort, counting transpositions.
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  return sign;
}

int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

// Lowest row above row 1, then leftmost, where the row decreases. With
// semistandard set, equal odd neighbours also count.
std::optional<std::pair<int, int>> find_decrease(const Tableau& t, bool semistandard) {
  for (int i = 1; i < t.num_rows(); ++i)
    for (int j = 0; j + 1 < t.row_length(i); ++j) {
      const auto& x = t.at(i, j);
      const auto& y = t.at(i, j + 1);
      auto c = x <=> y;
      if (c > 0 || (semistandard && c == 0 && x.parity() == 1)) return std::make_pair(i, j);
    }
  return std::nullopt;
}

}  // namespace

std::optional<ScaledTableau> act_on_smt(const SetPartition& pi, const Tableau& t) {
  int r = pi.size();
  int n = t.size();
  std::vector<std::pair<int, int>> boxes;
  for (int i = 0; i < t.num_rows(); ++i)
    for (int j = 0; j < t.row_length(i); ++j)
      if (!t.at(i, j).empty()) boxes.push_back({i, j});
  // Nodes: top points 0..r-1, content values r..2r-1, boxes after that.
  UnionFind uf(2 * r + static_cast<int>(boxes.size()));
  int seen_values = 0;
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    const auto& c = t.at(boxes[b].first, boxes[b].second);
    for (Letter x : c.letters()) {
      if (x.barred || x.underlined || x.value < 1 || x.value > r)
        throw std::invalid_argument("act_on_smt: content is not a set partition of [r]");
      uf.unite(2 * r + static_cast<int>(b), r + x.value - 1);
      ++seen_values;
    }
  }
  if (seen_values != r) throw std::invalid_argument("act_on_smt: content size does not match the diagram");
  std::vector<int> first(pi.num_blocks(), -1);
  for (int p = 0; p < 2 * r; ++p) {
    int b = pi.block_of(p);
    if (first[b] < 0)
      first[b] = p;
    else
      uf.unite(first[b], p);
  }
  struct Component {
    Multiset tops;
    std::vector<int> upper;  // box indices above row 1
    int lower = 0;           // boxes in row 1
  };
  std::map<int, Component> comps;
  for (int i = 0; i < r; ++i) comps[uf.find(i)].tops.insert(plain(i + 1));
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    auto& c = comps[uf.find(2 * r + static_cast<int>(b))];
    if (boxes[b].first > 0)
      c.upper.push_back(static_cast<int>(b));
    else
      ++c.lower;
  }
  Rows rows = t.rows();
  std::vector<Multiset> row1;
  int closed = 0;
  for (auto& [root, c] : comps) {
    if (c.upper.size() > 1) return std::nullopt;
    if (c.upper.size() == 1) {
      if (c.tops.empty()) return std::nullopt;
      rows[boxes[c.upper[0]].first][boxes[c.upper[0]].second] = c.tops;
    } else if (!c.tops.empty()) {
      row1.push_back(c.tops);
    } else if (c.lower > 0) {
      ++closed;
    }
  }
  int lambda1 = t.row_length(0), lambda2 = t.row_length(1);
  if (lambda1 - static_cast<int>(row1.size()) < lambda2)
    throw std::domain_error("act_on_smt: n too small for the resulting first row");
  std::sort(row1.begin(), row1.end());
  std::vector<Multiset> first_row(lambda1 - row1.size());
  first_row.insert(first_row.end(), row1.begin(), row1.end());
  if (!rows.empty()) rows[0] = first_row;
  mpq_class coeff = 1;
  for (int k = 0; k < closed; ++k) coeff *= n;
  return ScaledTableau{coeff, Tableau(rows)};
}

int canonicalize_smt(Tableau& t) {
  Rows rows = t.rows();
  if (rows.empty()) return 1;
  std::vector<Multiset> blocks;
  for (const auto& c : rows[0])
    if (!c.empty()) blocks.push_back(c);
  std::sort(blocks.begin(), blocks.end());
  std::vector<Multiset> first(rows[0].size() - blocks.size());
  first.insert(first.end(), blocks.begin(), blocks.end());
  rows[0] = first;
  int sign = 1;
  for (int j = 0; j < t.row_length(1); ++j) {
    std::vector<Multiset> col;
    for (int i = 1; i < t.column_height(j); ++i) col.push_back(rows[i][j]);
    sign *= sort_with_sign(col);
    for (int i = 1; i < t.column_height(j); ++i) rows[i][j] = col[i - 1];
  }
  t = Tableau(rows);
  return sign;
}

GarnirMove garnir_move(const Tableau& t, int row, int col) {
  GarnirMove m;
  m.row = row;
  m.col = col;
  for (int i = row; i < t.column_height(col); ++i) m.a_boxes.push_back({i, col});
  for (int i = 1; i <= row; ++i) m.b_boxes.push_back({i, col + 1});
  return m;
}

std::vector<std::pair<int, Tableau>> garnir_terms(const Tableau& t, const GarnirMove& move) {
  std::vector<std::pair<int, int>> cells = move.b_boxes;
  cells.insert(cells.end(), move.a_boxes.begin(), move.a_boxes.end());
  std::vector<Multiset> old;
  for (auto [i, j] : cells) old.push_back(t.at(i, j));
  std::vector<Multiset> pool = old;
  std::sort(pool.begin(), pool.end());
  int nb = static_cast<int>(move.b_boxes.size());
  int total = static_cast<int>(pool.size());
  std::vector<std::pair<int, Tableau>> out;
  std::vector<bool> choose(total, false);
  std::fill(choose.begin(), choose.begin() + nb, true);
  // Each subset of the pool destined for B, both parts sorted up the column.
  do {
    std::vector<Multiset> seq;
    for (int k = 0; k < total; ++k)
      if (choose[k]) seq.push_back(pool[k]);
    for (int k = 0; k < total; ++k)
      if (!choose[k]) seq.push_back(pool[k]);
    std::vector<int> perm(total);
    std::vector<bool> used(total, false);
    for (int k = 0; k < total; ++k)
      for (int q = 0; q < total; ++q)
        if (!used[q] && old[q] == seq[k]) {
          perm[k] = q;
          used[q] = true;
          break;
        }
    Rows rows = t.rows();
    for (int k = 0; k < total; ++k) rows[cells[k].first][cells[k].second] = seq[k];
    Tableau u(rows);
    if (u == t)
      out.insert(out.begin(), {permutation_sign(perm), u});
    else
      out.push_back({permutation_sign(perm), u});
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

namespace {

ModuleVector expand_smt(Tableau t, std::map<Tableau, ModuleVector>& memo, int depth) {
  if (depth > 100000) throw std::logic_error("straighten_smt: no termination");
  int sign = canonicalize_smt(t);
  auto dec = find_decrease(t, false);
  if (!dec) return ModuleVector(t, mpq_class(sign));
  auto it = memo.find(t);
  if (it == memo.end()) {
    auto terms = garnir_terms(t, garnir_move(t, dec->first, dec->second));
    ModuleVector res;
    for (std::size_t k = 1; k < terms.size(); ++k)
      res.add(expand_smt(terms[k].second, memo, depth + 1), mpq_class(-terms[k].first * terms[0].first));
    it = memo.emplace(t, std::move(res)).first;
  }
  ModuleVector out;
  out.add(it->second, mpq_class(sign));
  return out;
}

}  // namespace

ModuleVector straighten_smt(const ModuleVector& v) {
  thread_local std::map<Tableau, ModuleVector> memo;
  if (memo.size() > 200000) memo.clear();
  ModuleVector out;
  for (const auto& [t, c] : v.terms()) out.add(expand_smt(t, memo, 0), c);
  return out;
}

ModuleVector act_smt(const SetPartition& pi, const ModuleVector& v) {
  ModuleVector raw;
  for (const auto& [t, c] : v.terms()) {
    auto r = act_on_smt(pi, t);
    if (r) raw.add(r->tableau, c * r->coeff);
  }
  return straighten_smt(raw);
}

Tableau relabel(const Permutation& g, const Tableau& t) {
  Rows rows = t.rows();
  for (auto& row : rows)
    for (auto& c : row) {
      Multiset m;
      for (Letter x : c.letters()) m.insert(plain(g(x.value - 1) + 1));
      c = m;
    }
  return Tableau(rows);
}

int lift_sign(const Tableau& s, const ColoringMap& kappa) {
  Tableau colored = color_tableau(kappa, s);
  for (const auto& row : colored.rows())
    for (const auto& c : row)
      if (c.has_repeated_barred()) return 0;
  Tableau std_t = standardize_tableau(colored);
  int r = kappa.r(), n = kappa.size();
  std::vector<int> img(n - r, -1);
  for (int i = 0; i < s.num_rows(); ++i)
    for (int j = 0; j < s.row_length(i); ++j) {
      std::map<Letter, int> from, to;
      for (Letter x : s.at(i, j).letters())
        if (kappa.is_odd(x.value)) from[kappa.color(x.value)] = x.value;
      for (Letter x : std_t.at(i, j).letters())
        if (kappa.is_odd(x.value)) to[kappa.color(x.value)] = x.value;
      for (auto [c, v] : from) img[v - r - 1] = to.at(c) - r - 1;
    }
  return Permutation(img).sign();
}

ModuleVector project_e(const ModuleVector& v, const ColoringMap& kappa) {
  auto group = young_subgroup(kappa);
  mpq_class w(1, static_cast<long>(group.size()));
  ModuleVector raw;
  for (const auto& [t, c] : v.terms())
    for (const auto& g : group) raw.add(relabel(g.perm, t), c * w * g.sign);
  return straighten_smt(raw);
}

ModuleVector y_to_smt(const ModuleVector& y, const ColoringMap& kappa) {
  ModuleVector raw;
  for (const auto& [k, c] : y.terms()) raw.add(standardize_tableau(k), c);
  return project_e(raw, kappa);
}

ModuleVector smt_to_y(const ModuleVector& v, const ColoringMap& kappa) {
  ModuleVector out;
  for (const auto& [t, c] : v.terms()) {
    int s = lift_sign(t, kappa);
    if (s != 0) out.add(color_tableau(kappa, t), c * s);
  }
  return out;
}

namespace {

bool has_forced_zero(const Tableau& t) {
  if (t.num_rows() == 0) return false;
  std::set<Multiset> seen;
  for (const auto& c : t.rows()[0])
    if (!c.empty() && c.parity() == 1 && !seen.insert(c).second) return true;
  for (int j = 0; j < t.row_length(0); ++j) {
    std::set<Multiset> col;
    for (int i = 0; i < t.column_height(j); ++i) {
      const auto& c = t.at(i, j);
      if (!c.empty() && c.parity() == 0 && !col.insert(c).second) return true;
    }
  }
  return false;
}

ModuleVector expand_ssmt(const Tableau& tt, std::map<Tableau, ModuleVector>& memo, int depth) {
  if (depth > 100000) throw std::logic_error("straighten_ssmt: no termination");
  if (has_forced_zero(tt)) return {};
  auto it = memo.find(tt);
  if (it != memo.end()) return it->second;
  ColoringMap kappa = coloring_of(tt);
  Tableau lift = standardize_tableau(tt);
  int sign = canonicalize_smt(lift);
  sign *= lift_sign(lift, kappa);
  Tableau key = color_tableau(kappa, lift);
  ModuleVector res;
  if (key != tt) {
    res.add(expand_ssmt(key, memo, depth + 1), mpq_class(sign));
  } else if (sign == -1) {
    // y equals its own negative.
  } else if (auto dec = find_decrease(tt, true); !dec) {
    res.add(tt, mpq_class(1));
  } else {
    std::map<Tableau, mpq_class> acc;
    for (const auto& [sg, u] : garnir_terms(lift, garnir_move(lift, dec->first, dec->second))) {
      int ls = lift_sign(u, kappa);
      if (ls != 0) acc[color_tableau(kappa, u)] += sg * ls;
    }
    mpq_class c0 = acc[tt];
    if (c0 == 0) throw std::logic_error("straighten_ssmt: vanishing leading coefficient");
    for (const auto& [k, c] : acc)
      if (k != tt && c != 0) res.add(expand_ssmt(k, memo, depth + 1), mpq_class(-c / c0));
  }
  memo.emplace(tt, res);
  return res;
}

}  // namespace

ModuleVector straighten_ssmt(const ModuleVector& v) {
  thread_local std::map<Tableau, ModuleVector> memo;
  if (memo.size() > 200000) memo.clear();
  ModuleVector out;
  for (const auto& [t, c] : v.terms()) out.add(expand_ssmt(t, memo, 0), c);
  return out;
}

ModuleVector y_vector(const Tableau& tt) { return straighten_ssmt(ModuleVector(tt, mpq_class(1))); }

ModuleVector mp_act(const MPElement& d, const ModuleVector& v, const WeakComposition& a, const WeakComposition& b) {
  ColoringMap kappa(a, b);
  auto group = young_subgroup(kappa);
  mpq_class w(1, static_cast<long>(group.size()));
  auto id = Permutation::identity(kappa.size());
  ModuleVector raw;
  for (const auto& [t, c] : v.terms()) {
    long n = t.size();
    Tableau std_t = standardize_tableau(t);
    for (const auto& [pk, poly] : d.terms()) {
      SetPartition pi = standardize(pk, kappa);
      mpq_class scale = c * poly.evaluate(n) * w;
      for (const auto& g : group) {
        auto res = act_on_smt(act(id, pi, g.perm), std_t);
        if (!res) continue;
        int ls = lift_sign(res->tableau, kappa);
        if (ls == 0) continue;
        raw.add(color_tableau(kappa, res->tableau), scale * g.sign * ls * res->coeff);
      }
    }
  }
  return straighten_ssmt(raw);
}

long module_dimension(const Shape& lambda, const WeakComposition& a, const WeakComposition& b) {
  return static_cast<long>(enumerate_ssmt(lambda, a, b).size());
}

long module_rank(const Shape& lambda, const WeakComposition& a, const WeakComposition& b) {
  ColoringMap kappa(a, b);
  auto basis = enumerate_smt(lambda, kappa.size());
  std::map<Tableau, int> index;
  for (const auto& t : basis) index.emplace(t, static_cast<int>(index.size()));
  RowEchelon ech;
  for (const auto& t : basis) {
    SparseRow row;
    ModuleVector image = project_e(ModuleVector(t, mpq_class(1)), kappa);
    for (const auto& [k, c] : image.terms()) row[index.at(k)] = c;
    ech.insert(row);
  }
  return ech.rank();
}

}  // namespace mmpa
