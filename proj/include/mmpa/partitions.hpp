// Set partitions of [r] u [r-underlined], multiset partitions, restriction,
// standardization and the two-sided symmetric group action.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mmpa/alphabet.hpp"

namespace mmpa {

/// Permutation of {0..n-1}; composition (p*q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// Transposition of 0-based i and j.
  static Permutation transposition(int n, int i, int j);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  Permutation inverse() const;
  int sign() const;
  /// Sign of the restriction to the given invariant subset.
  int sign_on(const std::vector<int>& subset) const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Element of the Young subgroup S_a x S_b inside S_{r+s}, with sgn of the
/// barred factor.
struct GroupElement {
  Permutation perm;
  int sign = 1;
};

/// Every element of S_a x S_b; |a|+|b| must be at most 6.
std::vector<GroupElement> young_subgroup(const ColoringMap& kappa);

/// Partition of [r] u [r-underlined]. Points 0..r-1 are the top letters,
/// r..2r-1 the underlined ones; storage is the restricted growth string.
class SetPartition {
 public:
  SetPartition() = default;
  static SetPartition from_labels(int r, const std::vector<int>& labels);
  /// Blocks of plain/underlined letters; validates the ground set.
  static SetPartition from_blocks(int r, const std::vector<std::vector<Letter>>& blocks);
  static SetPartition identity(int r);
  static SetPartition of_permutation(const Permutation& p);

  int size() const { return r_; }
  int num_blocks() const;
  const std::vector<std::uint8_t>& labels() const { return rgs_; }
  int block_of(int point) const { return rgs_[point]; }
  /// Blocks in order of minimal element, each ascending.
  std::vector<std::vector<Letter>> blocks() const;
  std::vector<std::vector<int>> point_blocks() const;

  static Letter letter_of(int r, int point) {
    return point < r ? plain(point + 1) : under(point - r + 1);
  }
  static int point_of(int r, Letter x) { return x.underlined ? r + x.value - 1 : x.value - 1; }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  int r_ = 0;
  std::vector<std::uint8_t> rgs_;
};

/// Restricted growth strings of the given length, in lexicographic order.
std::vector<std::vector<int>> restricted_growth_strings(int points);

/// Pi_{2r} in restricted-growth-string order; r <= 5.
std::vector<SetPartition> enumerate_set_partitions(int r);

long long bell_number(int n);

/// Blocks sorted by last-letter order; empty blocks rejected.
class MultisetPartition {
 public:
  MultisetPartition() = default;
  explicit MultisetPartition(std::vector<Multiset> blocks);

  const std::vector<Multiset>& blocks() const { return blocks_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  Multiset ground() const;
  /// True when no block repeats a barred letter.
  bool valid() const;

  friend bool operator==(const MultisetPartition&, const MultisetPartition&) = default;
  friend auto operator<=>(const MultisetPartition&, const MultisetPartition&) = default;

 private:
  std::vector<Multiset> blocks_;
};

struct Profile {
  WeakComposition a, b;
  friend bool operator==(const Profile&, const Profile&) = default;
};

/// Profile read off the non-underlined letters of a multiset.
Profile profile_of(const Multiset& top);
/// [k]^a u [m-bar]^b, underlined copy included when both_rows is set.
Multiset ground_multiset(const WeakComposition& a, const WeakComposition& b, bool both_rows);
/// pt lies in Pi_{2(a,b)}.
bool in_profile(const MultisetPartition& pt, const WeakComposition& a, const WeakComposition& b);

struct ColoredPartition {
  MultisetPartition image;
  bool valid = false;
};

ColoredPartition apply_coloring(const ColoringMap& kappa, const SetPartition& pi);
SetPartition standardize(const MultisetPartition& pt, const ColoringMap& kappa);
bool is_restricted(const MultisetPartition& pt);
/// Pi-hat_{2(a,b)} sorted lexicographically; |a|+|b| <= 5.
std::vector<MultisetPartition> enumerate_restricted(const WeakComposition& a, const WeakComposition& b);
std::vector<Multiset> propagating_blocks(const MultisetPartition& pt);
std::vector<Multiset> non_propagating_blocks(const MultisetPartition& pt);

/// sigma.pi.tau: i -> sigma(i), i-underlined -> tau^{-1}(i)-underlined.
SetPartition act(const Permutation& sigma, const SetPartition& pi, const Permutation& tau);

struct StabilizerDecomposition {
  /// Per block: orbits of letters permuted within the block.
  struct BlockFactor {
    std::vector<Letter> block;
    std::vector<std::vector<Letter>> orbits;
    long long order() const;
  };
  std::vector<BlockFactor> within;
  /// Generators of H as (top permutation, bottom permutation) pairs acting
  /// through act(sigma, pi, tau) with tau the bottom map inverse.
  std::vector<std::pair<Permutation, Permutation>> block_generators;
  long long block_group_order = 1;
  long long order() const;
};

/// Stabilizer of pi in G x G with G the Young subgroup of kappa
/// (kappa with a single part gives S_r x S_r).
StabilizerDecomposition stabilizer(const SetPartition& pi, const ColoringMap& kappa);

}  // namespace mmpa
