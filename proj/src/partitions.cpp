#include "mmpa/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mmpa {

// ---- permutations ----

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  std::swap(p.img_[i], p.img_[j]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < degree(); ++i) v[img_[i]] = i;
  return Permutation(std::move(v));
}

int Permutation::sign() const {
  std::vector<bool> seen(img_.size(), false);
  int s = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

int Permutation::sign_on(const std::vector<int>& subset) const {
  std::vector<int> idx(subset.size());
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < subset.size(); ++k) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), img_[sorted[k]]);
    if (it == sorted.end() || *it != img_[sorted[k]]) throw std::invalid_argument("subset not invariant");
    idx[k] = static_cast<int>(it - sorted.begin());
  }
  return Permutation(idx).sign();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> v(p.img_.size());
  for (int i = 0; i < p.degree(); ++i) v[i] = p.img_[q.img_[i]];
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<GroupElement> young_subgroup(const ColoringMap& kappa) {
  int n = kappa.size();
  if (n > 6) throw ResourceError("Young subgroup too large (|a|+|b| > 6)");
  // Fibers as 0-based index ranges.
  std::vector<std::pair<std::vector<int>, bool>> fibers;
  for (int j = 0; j < kappa.a().length(); ++j) {
    auto f = kappa.fiber(plain(j + 1));
    if (!f.empty()) fibers.push_back({f, false});
  }
  for (int j = 0; j < kappa.b().length(); ++j) {
    auto f = kappa.fiber(bar(j + 1));
    if (!f.empty()) fibers.push_back({f, true});
  }
  std::vector<GroupElement> out{{Permutation::identity(n), 1}};
  for (const auto& [fib, odd] : fibers) {
    std::vector<GroupElement> next;
    auto local = all_permutations(static_cast<int>(fib.size()));
    for (const auto& g : out) {
      for (const auto& p : local) {
        std::vector<int> img = g.perm.images();
        for (std::size_t k = 0; k < fib.size(); ++k) img[fib[k] - 1] = fib[p(static_cast<int>(k))] - 1;
        next.push_back({Permutation(std::move(img)), odd ? g.sign * p.sign() : g.sign});
      }
    }
    out = std::move(next);
  }
  return out;
}

// ---- set partitions ----

SetPartition SetPartition::from_labels(int r, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != 2 * r) throw std::invalid_argument("label count must be 2r");
  SetPartition p;
  p.r_ = r;
  p.rgs_.resize(labels.size());
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = relabel.try_emplace(labels[i], static_cast<int>(relabel.size()));
    p.rgs_[i] = static_cast<std::uint8_t>(it->second);
  }
  return p;
}

SetPartition SetPartition::from_blocks(int r, const std::vector<std::vector<Letter>>& blocks) {
  std::vector<int> labels(2 * r, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (Letter x : blocks[b]) {
      if (x.barred || x.value < 1 || x.value > r)
        throw std::invalid_argument("letter outside [r] u [r-underlined]");
      int p = point_of(r, x);
      if (labels[p] != -1) throw std::invalid_argument("letter repeated across blocks");
      labels[p] = static_cast<int>(b);
    }
  }
  for (int l : labels)
    if (l == -1) throw std::invalid_argument("blocks do not cover [r] u [r-underlined]");
  return from_labels(r, labels);
}

SetPartition SetPartition::identity(int r) { return of_permutation(Permutation::identity(r)); }

SetPartition SetPartition::of_permutation(const Permutation& p) {
  int r = p.degree();
  std::vector<int> labels(2 * r);
  for (int i = 0; i < r; ++i) {
    labels[p(i)] = i;
    labels[r + i] = i;
  }
  return from_labels(r, labels);
}

int SetPartition::num_blocks() const {
  int m = 0;
  for (auto l : rgs_) m = std::max(m, static_cast<int>(l) + 1);
  return m;
}

std::vector<std::vector<int>> SetPartition::point_blocks() const {
  std::vector<std::vector<int>> out(num_blocks());
  for (std::size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(static_cast<int>(i));
  return out;
}

std::vector<std::vector<Letter>> SetPartition::blocks() const {
  std::vector<std::vector<Letter>> out;
  for (const auto& pb : point_blocks()) {
    std::vector<Letter> b;
    for (int p : pb) b.push_back(letter_of(r_, p));
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<std::vector<int>> restricted_growth_strings(int points) {
  std::vector<std::vector<int>> out;
  if (points == 0) return {{}};
  std::vector<int> a(points, 0), mx(points, 0);
  // Iterative odometer over restricted growth strings.
  while (true) {
    out.push_back(a);
    int i = points - 1;
    while (i > 0 && a[i] == mx[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    mx[i] = std::max(mx[i - 1], a[i]);
    for (int j = i + 1; j < points; ++j) {
      a[j] = 0;
      mx[j] = mx[i];
    }
  }
  return out;
}

std::vector<SetPartition> enumerate_set_partitions(int r) {
  if (r < 0) throw std::invalid_argument("negative size");
  if (r > 5) throw ResourceError("enumerate_set_partitions: r > 5");
  std::vector<SetPartition> out;
  for (const auto& rgs : restricted_growth_strings(2 * r)) out.push_back(SetPartition::from_labels(r, rgs));
  return out;
}

long long bell_number(int n) {
  std::vector<long long> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<long long> next{row.back()};
    for (long long v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

// ---- multiset partitions ----

MultisetPartition::MultisetPartition(std::vector<Multiset> blocks) : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_)
    if (b.empty()) throw std::invalid_argument("partition blocks must be nonempty");
  std::sort(blocks_.begin(), blocks_.end());
}

Multiset MultisetPartition::ground() const {
  Multiset g;
  for (const auto& b : blocks_) g = g + b;
  return g;
}

bool MultisetPartition::valid() const {
  for (const auto& b : blocks_)
    if (b.has_repeated_barred()) return false;
  return true;
}

Profile profile_of(const Multiset& top) {
  std::vector<int> a, b;
  for (const auto& [s, m] : top.entries()) {
    if (s.underlined) continue;
    auto& v = s.barred ? b : a;
    if (static_cast<int>(v.size()) < s.value) v.resize(s.value, 0);
    v[s.value - 1] += m;
  }
  return {WeakComposition(a), WeakComposition(b)};
}

Multiset ground_multiset(const WeakComposition& a, const WeakComposition& b, bool both_rows) {
  Multiset g;
  for (int j = 0; j < a.length(); ++j) {
    g.insert(plain(j + 1), a[j]);
    if (both_rows) g.insert(under(j + 1), a[j]);
  }
  for (int j = 0; j < b.length(); ++j) {
    g.insert(bar(j + 1), b[j]);
    if (both_rows) g.insert(bar_under(j + 1), b[j]);
  }
  return g;
}

bool in_profile(const MultisetPartition& pt, const WeakComposition& a, const WeakComposition& b) {
  return pt.valid() && pt.ground() == ground_multiset(a, b, true);
}

ColoredPartition apply_coloring(const ColoringMap& kappa, const SetPartition& pi) {
  if (pi.size() != kappa.size()) throw std::invalid_argument("apply_coloring: size mismatch");
  std::vector<Multiset> blocks;
  for (const auto& b : pi.blocks()) {
    Multiset m;
    for (Letter x : b) m.insert(kappa.color(x));
    blocks.push_back(std::move(m));
  }
  ColoredPartition out{MultisetPartition(std::move(blocks)), false};
  out.valid = out.image.valid();
  return out;
}

SetPartition standardize(const MultisetPartition& pt, const ColoringMap& kappa) {
  if (!in_profile(pt, kappa.a(), kappa.b())) throw std::invalid_argument("standardize: partition not in profile");
  int n = kappa.size();
  std::map<Letter, std::vector<int>> fibers;
  std::map<Letter, std::size_t> next_top, next_bottom;
  std::vector<std::vector<Letter>> blocks;
  for (const auto& b : pt.blocks()) {
    std::vector<Letter> out;
    for (Letter x : b.letters()) {
      Letter c = x.with_underline(false);
      if (!fibers.count(c)) fibers[c] = kappa.fiber(c);
      auto& counter = x.underlined ? next_bottom[c] : next_top[c];
      int v = fibers[c].at(counter++);
      out.push_back(x.underlined ? under(v) : plain(v));
    }
    blocks.push_back(std::move(out));
  }
  return SetPartition::from_blocks(n, blocks);
}

bool is_restricted(const MultisetPartition& pt) {
  const auto& bl = pt.blocks();
  for (std::size_t i = 0; i + 1 < bl.size(); ++i)
    if (bl[i] == bl[i + 1] && bl[i].parity() == 1) return false;
  return pt.valid();
}

std::vector<MultisetPartition> enumerate_restricted(const WeakComposition& a, const WeakComposition& b) {
  ColoringMap kappa(a, b);
  if (kappa.size() > 5) throw ResourceError("enumerate_restricted: |a|+|b| > 5");
  std::set<MultisetPartition> seen;
  for (const auto& pi : enumerate_set_partitions(kappa.size())) {
    auto c = apply_coloring(kappa, pi);
    if (c.valid && is_restricted(c.image)) seen.insert(c.image);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Multiset> propagating_blocks(const MultisetPartition& pt) {
  std::vector<Multiset> out;
  for (const auto& b : pt.blocks())
    if (b.has_underlined() && b.has_non_underlined()) out.push_back(b);
  return out;
}

std::vector<Multiset> non_propagating_blocks(const MultisetPartition& pt) {
  std::vector<Multiset> out;
  for (const auto& b : pt.blocks())
    if (!(b.has_underlined() && b.has_non_underlined())) out.push_back(b);
  return out;
}

SetPartition act(const Permutation& sigma, const SetPartition& pi, const Permutation& tau) {
  int r = pi.size();
  if (sigma.degree() != r || tau.degree() != r) throw std::invalid_argument("act: degree mismatch");
  Permutation tinv = tau.inverse();
  std::vector<int> labels(2 * r);
  for (int i = 0; i < r; ++i) {
    labels[sigma(i)] = pi.block_of(i);
    labels[r + tinv(i)] = pi.block_of(r + i);
  }
  return SetPartition::from_labels(r, labels);
}

// ---- stabilizer ----

long long StabilizerDecomposition::BlockFactor::order() const {
  long long o = 1;
  for (const auto& orb : orbits)
    for (std::size_t k = 2; k <= orb.size(); ++k) o *= static_cast<long long>(k);
  return o;
}

long long StabilizerDecomposition::order() const {
  long long o = block_group_order;
  for (const auto& f : within) o *= f.order();
  return o;
}

StabilizerDecomposition stabilizer(const SetPartition& pi, const ColoringMap& kappa) {
  int r = pi.size();
  if (kappa.size() != r) throw std::invalid_argument("stabilizer: size mismatch");
  StabilizerDecomposition out;
  auto blocks = pi.blocks();
  std::map<Multiset, std::vector<int>> by_type;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    StabilizerDecomposition::BlockFactor f;
    f.block = blocks[bi];
    std::map<Letter, std::vector<Letter>> orbit;
    Multiset type;
    for (Letter x : blocks[bi]) {
      Letter c = kappa.color(x);
      orbit[c].push_back(x);
      type.insert(c);
    }
    for (auto& [c, v] : orbit) f.orbits.push_back(v);
    out.within.push_back(std::move(f));
    by_type[type].push_back(static_cast<int>(bi));
  }
  // Swap consecutive blocks of equal colored type, matching letters of equal
  // color in sorted order.
  for (const auto& [type, idx] : by_type) {
    for (std::size_t k = 2; k <= idx.size(); ++k) out.block_group_order *= static_cast<long long>(k);
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
      std::vector<int> top(r), bottom(r);
      std::iota(top.begin(), top.end(), 0);
      std::iota(bottom.begin(), bottom.end(), 0);
      const auto& o1 = out.within[idx[k]].orbits;
      const auto& o2 = out.within[idx[k + 1]].orbits;
      for (std::size_t g = 0; g < o1.size(); ++g) {
        for (std::size_t t = 0; t < o1[g].size(); ++t) {
          Letter x = o1[g][t], y = o2[g][t];
          auto& m = x.underlined ? bottom : top;
          m[x.value - 1] = y.value - 1;
          m[y.value - 1] = x.value - 1;
        }
      }
      Permutation beta(bottom);
      out.block_generators.push_back({Permutation(top), beta.inverse()});
    }
  }
  return out;
}

}  // namespace mmpa
