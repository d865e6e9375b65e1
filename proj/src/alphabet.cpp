#include "mmpa/alphabet.hpp"

#include <algorithm>
#include <numeric>

namespace mmpa {

std::strong_ordering cmp_letters(Letter x, Letter y) { return x <=> y; }

Multiset::Multiset(std::initializer_list<Letter> letters) {
  for (Letter s : letters) insert(s);
}

Multiset::Multiset(const std::vector<Letter>& letters) {
  for (Letter s : letters) insert(s);
}

int Multiset::multiplicity(Letter s) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                             [](const Entry& e, Letter v) { return e.first < v; });
  return (it != entries_.end() && it->first == s) ? it->second : 0;
}

int Multiset::size() const {
  int n = 0;
  for (const auto& e : entries_) n += e.second;
  return n;
}

Letter Multiset::max() const {
  if (entries_.empty()) throw std::logic_error("max of empty multiset");
  return entries_.back().first;
}

std::vector<Letter> Multiset::letters() const {
  std::vector<Letter> out;
  for (const auto& [s, m] : entries_)
    for (int i = 0; i < m; ++i) out.push_back(s);
  return out;
}

void Multiset::insert(Letter s, int count) {
  if (s.value < 1) throw std::invalid_argument("letter value must be positive");
  if (count <= 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                             [](const Entry& e, Letter v) { return e.first < v; });
  if (it != entries_.end() && it->first == s)
    it->second += count;
  else
    entries_.insert(it, {s, count});
}

Multiset Multiset::operator+(const Multiset& other) const {
  Multiset out = *this;
  for (const auto& [s, m] : other.entries_) out.insert(s, m);
  return out;
}

int Multiset::barred_count() const {
  int n = 0;
  for (const auto& [s, m] : entries_)
    if (s.barred) n += m;
  return n;
}

bool Multiset::has_repeated_barred() const {
  for (const auto& [s, m] : entries_)
    if (s.barred && m > 1) return true;
  return false;
}

bool Multiset::has_underlined() const {
  for (const auto& e : entries_)
    if (e.first.underlined) return true;
  return false;
}

bool Multiset::has_non_underlined() const {
  for (const auto& e : entries_)
    if (!e.first.underlined) return true;
  return false;
}

Multiset Multiset::part(bool underlined) const {
  Multiset out;
  for (const auto& [s, m] : entries_)
    if (s.underlined == underlined) out.entries_.push_back({s, m});
  return out;
}

Multiset Multiset::with_underline(bool u) const {
  Multiset out;
  for (const auto& [s, m] : entries_) out.insert(s.with_underline(u), m);
  return out;
}

// Compare the descending letter sequences lexicographically, a proper prefix
// being smaller.
std::strong_ordering operator<=>(const Multiset& x, const Multiset& y) {
  auto i = x.entries_.rbegin();
  auto j = y.entries_.rbegin();
  while (i != x.entries_.rend() && j != y.entries_.rend()) {
    if (auto c = i->first <=> j->first; c != 0) return c;
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  bool xe = i == x.entries_.rend();
  bool ye = j == y.entries_.rend();
  if (xe && ye) return std::strong_ordering::equal;
  return xe ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering cmp_last_letter(const Multiset& s, const Multiset& r) { return s <=> r; }

WeakComposition::WeakComposition(std::initializer_list<int> parts) : WeakComposition(std::vector<int>(parts)) {}

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
}

int WeakComposition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

WeakComposition WeakComposition::trimmed() const {
  std::vector<int> p = parts_;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return WeakComposition(p);
}

bool dominance_leq(const WeakComposition& a, const WeakComposition& b) {
  if (a.length() != b.length()) throw std::invalid_argument("dominance_leq: length mismatch");
  long sa = 0, sb = 0;
  for (int i = 0; i < a.length(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

ColoringMap::ColoringMap(WeakComposition a, WeakComposition b) : a_(std::move(a)), b_(std::move(b)) {
  for (int j = 0; j < a_.length(); ++j)
    for (int t = 0; t < a_[j]; ++t) table_.push_back(plain(j + 1));
  for (int j = 0; j < b_.length(); ++j)
    for (int t = 0; t < b_[j]; ++t) table_.push_back(bar(j + 1));
}

Letter ColoringMap::color(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("color: index out of range");
  return table_[i - 1];
}

Letter ColoringMap::color(Letter x) const {
  if (x.barred) throw std::invalid_argument("color: input must be a plain or underlined letter");
  return color(x.value).with_underline(x.underlined);
}

std::vector<int> ColoringMap::fiber(Letter c) const {
  c.underlined = false;
  std::vector<int> out;
  for (int i = 1; i <= size(); ++i)
    if (table_[i - 1] == c) out.push_back(i);
  return out;
}

}  // namespace mmpa
