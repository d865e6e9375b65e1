// Letters over the four alphabets, multisets of letters, weak compositions and
// the coloring map.
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mmpa {

/// Raised when a request exceeds one of the documented desk-scale bounds.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Letter {
  int value = 1;
  bool barred = false;
  bool underlined = false;

  /// 0 plain, 1 barred, 2 underlined, 3 barred-underlined.
  constexpr int alphabet() const { return (underlined ? 2 : 0) + (barred ? 1 : 0); }

  friend constexpr std::strong_ordering operator<=>(const Letter& x, const Letter& y) {
    if (auto c = x.alphabet() <=> y.alphabet(); c != 0) return c;
    return x.value <=> y.value;
  }
  friend constexpr bool operator==(const Letter&, const Letter&) = default;

  Letter with_underline(bool u) const { return Letter{value, barred, u}; }
};

inline Letter plain(int v) { return Letter{v, false, false}; }
inline Letter bar(int v) { return Letter{v, true, false}; }
inline Letter under(int v) { return Letter{v, false, true}; }
inline Letter bar_under(int v) { return Letter{v, true, true}; }

std::strong_ordering cmp_letters(Letter x, Letter y);

/// Finite multiset of letters, stored as sorted (letter, multiplicity) pairs.
/// The natural ordering (operator<=>) is the last-letter order.
class Multiset {
 public:
  using Entry = std::pair<Letter, int>;

  Multiset() = default;
  Multiset(std::initializer_list<Letter> letters);
  explicit Multiset(const std::vector<Letter>& letters);

  const std::vector<Entry>& entries() const { return entries_; }
  int multiplicity(Letter s) const;
  int size() const;
  bool empty() const { return entries_.empty(); }
  /// Largest letter; precondition: nonempty.
  Letter max() const;
  /// Letters in ascending order, repeated by multiplicity.
  std::vector<Letter> letters() const;

  void insert(Letter s, int count = 1);
  Multiset operator+(const Multiset& other) const;

  int barred_count() const;
  int parity() const { return barred_count() & 1; }
  bool has_repeated_barred() const;
  bool has_underlined() const;
  bool has_non_underlined() const;
  /// Sub-multiset of letters with the given underline status.
  Multiset part(bool underlined) const;
  /// Every letter with its underline flag replaced.
  Multiset with_underline(bool u) const;

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend std::strong_ordering operator<=>(const Multiset& x, const Multiset& y);

 private:
  std::vector<Entry> entries_;
};

std::strong_ordering cmp_last_letter(const Multiset& s, const Multiset& r);

class WeakComposition {
 public:
  WeakComposition() = default;
  WeakComposition(std::initializer_list<int> parts);
  explicit WeakComposition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int total() const;
  int operator[](int i) const { return parts_.at(i); }
  /// Drop trailing zero parts.
  WeakComposition trimmed() const;

  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
  friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

 private:
  std::vector<int> parts_;
};

/// Prefix-sum dominance; throws std::invalid_argument on length mismatch.
bool dominance_leq(const WeakComposition& a, const WeakComposition& b);

/// The coloring map [r+s] -> [k] u [m-bar] built from compositions a and b.
class ColoringMap {
 public:
  ColoringMap(WeakComposition a, WeakComposition b);

  const WeakComposition& a() const { return a_; }
  const WeakComposition& b() const { return b_; }
  int r() const { return a_.total(); }
  int s() const { return b_.total(); }
  int size() const { return r() + s(); }

  /// Color of i in 1..r+s.
  Letter color(int i) const;
  /// Color of a plain or underlined letter; underlines are preserved.
  Letter color(Letter x) const;
  /// Values in 1..r+s whose color is c (ignoring underline), ascending.
  std::vector<int> fiber(Letter c) const;
  /// True when i maps to a barred letter.
  bool is_odd(int i) const { return i > r(); }

 private:
  WeakComposition a_, b_;
  std::vector<Letter> table_;
};

}  // namespace mmpa
