// Shapes, multiset partition tableaux, tableau classes, standardization,
// column dominance and enumeration.
#pragma once

#include <map>
#include <vector>

#include "mmpa/alphabet.hpp"
#include "mmpa/partitions.hpp"

namespace mmpa {

class Shape {
 public:
  Shape() = default;
  Shape(std::initializer_list<int> parts);
  explicit Shape(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < rows() ? parts_[i] : 0; }
  int size() const;
  /// Shape with the first row removed.
  Shape tail() const;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<int> parts_;
};

/// Integer partitions of n in reverse lexicographic order.
std::vector<Shape> partitions_of(int n);
/// True when lambda dominates mu (same size assumed).
bool shape_dominates(const Shape& lambda, const Shape& mu);

/// Box contents by row, bottom row first. Empty multisets mark empty boxes.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<Multiset>> rows);

  const std::vector<std::vector<Multiset>>& rows() const { return rows_; }
  Shape shape() const;
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int row_length(int i) const { return i < num_rows() ? static_cast<int>(rows_[i].size()) : 0; }
  int column_height(int j) const;
  const Multiset& at(int row, int col) const { return rows_[row][col]; }
  Multiset& at(int row, int col) { return rows_[row][col]; }
  int size() const;
  int empty_count() const;
  /// Nonempty box contents, sorted.
  std::vector<Multiset> content() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<Multiset>> rows_;
};

struct TableauClass {
  bool mt = false;
  bool smt = false;
  bool ssmt = false;
  bool ssmt_prime = false;
};

/// Structural validity: empty boxes form a prefix of row 1 of length at least
/// lambda_2, no underlined letters, no block repeats a barred letter.
bool is_multiset_tableau(const Tableau& t);
TableauClass classify(const Tableau& t);
/// Semistandard supertableau conditions over nonempty boxes (no empties allowed).
bool is_ssst(const Tableau& t);
bool is_syt(const Tableau& t);
bool is_ssyt(const Tableau& t);

/// Coloring map read off the content of a multiset partition tableau.
ColoringMap coloring_of(const Tableau& t);
/// Box-wise coloring of a set-partition-content tableau.
Tableau color_tableau(const ColoringMap& kappa, const Tableau& t);
Tableau standardize_tableau(const Tableau& t);

enum class Dominance { Less, Equal, Greater, Incomparable };

/// alpha^B for every distinct content B in last-letter order.
std::vector<std::pair<Multiset, WeakComposition>> alpha_sequences(const Tableau& t);
Dominance col_dominance_cmp(const Tableau& s, const Tableau& t);

std::vector<Tableau> enumerate_syt(const Shape& shape);
std::vector<Tableau> enumerate_ssyt(const Shape& shape, int max_entry);
/// Semistandard supertableaux of the given shape with the given letters.
std::vector<Tableau> enumerate_ssst(const Shape& shape, const std::vector<Multiset>& letters);
std::vector<Tableau> enumerate_ssmt(const Shape& lambda, const WeakComposition& a, const WeakComposition& b);
std::vector<Tableau> enumerate_smt(const Shape& lambda, int r);
/// All SSMT with n boxes, grouped by shape lambda = (n-|mu|, mu).
std::map<Shape, std::vector<Tableau>> ssmt_by_shape(const WeakComposition& a, const WeakComposition& b, int n);
/// Fillings of lambda |- r+s by singletons (no empty boxes) under the SSMT rules.
std::vector<Tableau> enumerate_ssmt_prime(const Shape& lambda, const WeakComposition& a, const WeakComposition& b);

/// Multiset partitions of [k]^a u [m-bar]^b with no barred repeat in a block.
std::vector<MultisetPartition> content_partitions(const WeakComposition& a, const WeakComposition& b);

}  // namespace mmpa
