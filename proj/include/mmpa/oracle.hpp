// Independent brute-force oracles: symmetric group characters, S_n
// multiplicities of graded pieces, and commutant dimensions.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mmpa/alphabet.hpp"
#include "mmpa/partitions.hpp"
#include "mmpa/tableaux.hpp"

namespace mmpa {

/// chi^lambda at cycle type mu by border-strip removal.
std::int64_t mn_character(const Shape& lambda, const Shape& mu);
/// Number of permutations of cycle type mu.
std::int64_t class_size(const Shape& mu);
/// Dimension of the Specht module by the hook length formula.
std::int64_t hook_dimension(const Shape& lambda);

/// A monomial of C[X; Theta]^{a,b}: per x column a sorted multiset of rows,
/// per theta column a strictly increasing set of rows (rows 0-based).
struct GradedMonomial {
  std::vector<std::vector<int>> x, theta;
  friend auto operator<=>(const GradedMonomial&, const GradedMonomial&) = default;
};

std::vector<GradedMonomial> graded_basis(int n, const WeakComposition& a, const WeakComposition& b);
/// g applied to a monomial: the re-sorted monomial and the wedge sign.
std::pair<GradedMonomial, int> act_on_monomial(const Permutation& g, const GradedMonomial& m);
/// Trace of g on the graded piece.
std::int64_t graded_character(const Permutation& g, int n, const WeakComposition& a, const WeakComposition& b);

/// Multiplicity of S^lambda in C[X; Theta]^{a,b} for every lambda |- n.
std::map<Shape, std::int64_t> graded_piece_multiplicities(int n, const WeakComposition& a, const WeakComposition& b);

/// dim End_{S_n} of the graded piece, by exact elimination of XA_g = A_gX.
long commutant_dimension(int n, const WeakComposition& a, const WeakComposition& b);

}  // namespace mmpa
