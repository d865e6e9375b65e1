#include "mmpa/linalg.hpp"

namespace mmpa {

namespace {

using IntRow = std::map<int, mpz_class>;

IntRow to_integer(const SparseRow& row) {
  mpz_class l = 1;
  for (const auto& [c, v] : row)
    if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  for (const auto& [c, v] : row)
    if (v != 0) out[c] = v.get_num() * (l / v.get_den());
  return out;
}

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

}  // namespace

bool RowEchelon::insert(const SparseRow& input) {
  IntRow row = to_integer(input);
  while (!row.empty()) {
    int lead = row.begin()->first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      make_primitive(row);
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    const IntRow& p = it->second;
    mpz_class a = p.at(lead), b = row.at(lead);
    IntRow next;
    for (const auto& [c, v] : row) next[c] = a * v;
    for (const auto& [c, v] : p) next[c] -= b * v;
    for (auto i = next.begin(); i != next.end();) i = (i->second == 0) ? next.erase(i) : std::next(i);
    make_primitive(next);
    row = std::move(next);
  }
  return false;
}

int exact_rank(const std::vector<SparseRow>& rows) {
  RowEchelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace mmpa
