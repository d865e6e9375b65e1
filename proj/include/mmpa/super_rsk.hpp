// Super RSK over superalphabets whose letters are multisets; the parity of a
// letter is the parity of its barred count.
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "mmpa/alphabet.hpp"
#include "mmpa/tableaux.hpp"

namespace mmpa {

using SuperLetter = Multiset;
using SuperTableau = Tableau;

struct Biletter {
  SuperLetter top;
  SuperLetter bottom;
  friend bool operator==(const Biletter&, const Biletter&) = default;
};
using Biword = std::vector<Biletter>;

class SrskError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::strong_ordering biletter_cmp(const Biletter& x, const Biletter& y);
bool is_ordered(const Biword& w);
bool is_restricted(const Biword& w);
/// Sort a biword by the biletter order.
Biword sorted(Biword w);

struct Cell {
  int row = 0;
  int col = 0;
};

/// mode 0 or 1; the new cell is reported through created when non-null.
SuperTableau insert(const SuperTableau& t, const SuperLetter& a, int mode, Cell* created = nullptr);
inline SuperTableau insert0(const SuperTableau& t, const SuperLetter& a) { return insert(t, a, 0); }
inline SuperTableau insert1(const SuperTableau& t, const SuperLetter& a) { return insert(t, a, 1); }

/// Reverse of insert: removes the corner cell and returns the ejected letter.
std::pair<SuperTableau, SuperLetter> uninsert(const SuperTableau& t, Cell corner, int mode);

std::pair<SuperTableau, SuperTableau> srsk(const Biword& w);
Biword srsk_inverse(const SuperTableau& p, const SuperTableau& q);

}  // namespace mmpa
