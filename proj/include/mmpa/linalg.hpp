// Exact rank over Q by fraction-free elimination on sparse rows.
#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace mmpa {

using SparseRow = std::map<int, mpq_class>;

class RowEchelon {
 public:
  /// Reduce the row against the current pivots; returns true if it was
  /// independent (and is kept).
  bool insert(const SparseRow& row);
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  std::map<int, std::map<int, mpz_class>> pivots_;
};

int exact_rank(const std::vector<SparseRow>& rows);

}  // namespace mmpa
