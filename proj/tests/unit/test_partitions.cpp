#include "doctest.h"
#include "oracles.hpp"

using namespace mmpa;
using oracle::P;
using oracle::SP;

namespace {

/// Pi_{2(a,b)} as the valid coloring images of Pi_{2(r+s)}.
std::set<MultisetPartition> profile_partitions(const WeakComposition& a, const WeakComposition& b) {
  ColoringMap k(a, b);
  std::set<MultisetPartition> out;
  for (const auto& pi : enumerate_set_partitions(k.size())) {
    auto img = apply_coloring(k, pi);
    if (img.valid) out.insert(img.image);
  }
  return out;
}

const std::vector<std::pair<WeakComposition, WeakComposition>> kProfiles = {
    {{1}, {}},    {{2}, {}},       {{}, {2}},     {{1}, {1}},    {{1, 1}, {}},   {{3}, {}},
    {{2}, {1}},   {{1}, {2}},      {{}, {3}},     {{2, 1}, {}},  {{1}, {1, 1}},  {{2, 2}, {}},
    {{2}, {2}},   {{1, 1}, {2}},   {{}, {2, 2}},  {{0, 2}, {2, 0}}, {{1}, {3}}, {{4}, {}}};

}  // namespace

TEST_CASE("set partition enumeration counts are Bell numbers") {
  CHECK(enumerate_set_partitions(0).size() == 1);
  auto one = enumerate_set_partitions(1);
  REQUIRE(one.size() == 2);
  CHECK(std::count(one.begin(), one.end(), SP("[{1,_1}]")) == 1);
  CHECK(std::count(one.begin(), one.end(), SP("[{1},{_1}]")) == 1);
  for (int r = 0; r <= 4; ++r) {
    auto all = enumerate_set_partitions(r);
    CHECK(static_cast<long long>(all.size()) == oracle::bell_triangle(2 * r));
    CHECK(bell_number(2 * r) == oracle::bell_triangle(2 * r));
    std::set<SetPartition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
  CHECK_THROWS_AS(enumerate_set_partitions(6), ResourceError);
}

TEST_CASE("coloring a set partition") {
  ColoringMap k({2, 1}, {0, 2});
  auto img = apply_coloring(k, SP("[{1,2,5},{3,4,_3},{_2,_4},{_1,_5}]"));
  CHECK(img.valid);
  CHECK(img.image == P("[{1,1,~2},{2,~2,_2},{_1,~_2},{_1,~_2}]"));

  ColoringMap id({1, 1, 1}, {});
  auto pi = SP("[{1,_2},{2,3},{_1},{_3}]");
  auto same = apply_coloring(id, pi);
  CHECK(same.valid);
  CHECK(same.image == as_multiset_partition(pi));

  ColoringMap odd({0, 0}, {2, 0});
  CHECK_FALSE(apply_coloring(odd, SP("[{1,2},{_1},{_2}]")).valid);
}

TEST_CASE("standardization examples") {
  CHECK(standardize(P("[{1,_1}]"), ColoringMap({1}, {})) == SP("[{1,_1}]"));
  CHECK(standardize(P("[{1},{1,_1},{_1}]"), ColoringMap({2}, {})) == SP("[{1},{_1},{2,_2}]"));
  CHECK(standardize(P("[{1,1},{_1,_1}]"), ColoringMap({2}, {})) == SP("[{1,2},{_1,_2}]"));
}

TEST_CASE("standardization is a section of the coloring map with ordered blocks") {
  for (const auto& [a, b] : kProfiles) {
    ColoringMap k(a, b);
    if (k.size() > 4) continue;
    for (const auto& pt : profile_partitions(a, b)) {
      SetPartition pi = standardize(pt, k);
      auto img = apply_coloring(k, pi);
      REQUIRE(img.valid);
      CHECK(img.image == pt);
      // Block order condition over every pair of equal-colored values.
      int r = pi.size();
      auto blocks = pi.point_blocks();
      auto block_multiset = [&](int point) {
        std::vector<Letter> ls;
        for (int q : blocks[pi.block_of(point)]) ls.push_back(SetPartition::letter_of(r, q));
        return Multiset(ls);
      };
      for (int row = 0; row < 2; ++row)
        for (int i = 1; i <= r; ++i)
          for (int j = i + 1; j <= r; ++j)
            if (k.color(i) == k.color(j))
              CHECK(block_multiset(row * r + i - 1) <= block_multiset(row * r + j - 1));
    }
  }
}

TEST_CASE("restriction examples") {
  CHECK(is_restricted(P("[{1,_1,_2},{2},{~1,~_1},{~1,~_1}]")));
  CHECK(is_restricted(P("[{~1,~_1},{~1},{~_1}]")));
  CHECK_FALSE(is_restricted(P("[{~1},{~1},{~_1},{~_1}]")));
}

TEST_CASE("restricted partitions: counts and agreement with filtered coloring images") {
  CHECK(enumerate_restricted({1}, {}).size() == 2);
  CHECK(enumerate_restricted({}, {2}).size() == 2);
  CHECK(enumerate_restricted({1}, {1}).size() == 15);
  auto odd = enumerate_restricted({}, {2});
  CHECK(std::count(odd.begin(), odd.end(), P("[{~1,~_1},{~1,~_1}]")) == 1);
  CHECK(std::count(odd.begin(), odd.end(), P("[{~1,~_1},{~1},{~_1}]")) == 1);
  for (const auto& [a, b] : kProfiles) {
    if (a.total() + b.total() > 4) continue;
    auto listed = enumerate_restricted(a, b);
    CHECK(std::is_sorted(listed.begin(), listed.end()));
    std::set<MultisetPartition> expected;
    for (const auto& pt : profile_partitions(a, b))
      if (is_restricted(pt)) expected.insert(pt);
    CHECK(std::set<MultisetPartition>(listed.begin(), listed.end()) == expected);
    CHECK(listed.size() == expected.size());
    for (const auto& pt : listed) CHECK(in_profile(pt, a, b));
  }
}

TEST_CASE("propagating blocks") {
  CHECK(propagating_blocks(P("[{1,_1}]")) == P("[{1,_1}]").blocks());
  CHECK(propagating_blocks(P("[{1},{_1}]")).empty());
  CHECK(non_propagating_blocks(P("[{1},{_1}]")).size() == 2);
  CHECK(propagating_blocks(P("[{1,_1,_1},{1}]")) == std::vector<Multiset>{oracle::M("{1,_1,_1}")});
}

TEST_CASE("two-sided action examples") {
  auto pi = SP("[{1,_1},{2,_2}]");
  CHECK(act(Permutation::transposition(2, 0, 1), pi, Permutation::identity(2)) == SP("[{2,_1},{1,_2}]"));
  CHECK(act(Permutation::identity(2), pi, Permutation::identity(2)) == pi);
  CHECK_THROWS(act(Permutation::identity(3), pi, Permutation::identity(2)));
}

TEST_CASE("two-sided action is a group action preserving block data") {
  for (int r = 1; r <= 3; ++r) {
    auto perms = all_permutations(r);
    for (const auto& pi : enumerate_set_partitions(r)) {
      auto sizes = [](const SetPartition& p) {
        std::multiset<std::size_t> out;
        for (const auto& bl : p.blocks()) out.insert(bl.size());
        return out;
      };
      int prop = static_cast<int>(propagating_blocks(as_multiset_partition(pi)).size());
      for (const auto& s : perms)
        for (const auto& s2 : perms)
          for (const auto& t : perms)
            for (const auto& t2 : perms) REQUIRE(act(s * s2, pi, t2 * t) == act(s, act(s2, pi, t2), t));
      for (const auto& s : perms)
        for (const auto& t : perms) {
          auto img = act(s, pi, t);
          CHECK(sizes(img) == sizes(pi));
          CHECK(static_cast<int>(propagating_blocks(as_multiset_partition(img)).size()) == prop);
        }
    }
  }
}

TEST_CASE("stabilizer decomposition of the worked example") {
  auto pi = SP("[{1,2,_1},{3,4,_2},{5},{_3,_4,_5}]");
  auto st = stabilizer(pi, ColoringMap({5}, {}));
  CHECK(st.block_group_order == 2);
  CHECK(st.order() == 48);
  CHECK(oracle::stabilizer_count(pi) == 48);
  std::map<std::vector<Letter>, std::vector<std::vector<Letter>>> orbits;
  for (const auto& f : st.within) orbits[f.block] = f.orbits;
  using L = std::vector<Letter>;
  CHECK(orbits[L{plain(1), plain(2), under(1)}] == std::vector<L>{L{plain(1), plain(2)}, L{under(1)}});
  CHECK(orbits[L{plain(3), plain(4), under(2)}] == std::vector<L>{L{plain(3), plain(4)}, L{under(2)}});
  CHECK(orbits[L{under(3), under(4), under(5)}] == std::vector<L>{L{under(3), under(4), under(5)}});
  REQUIRE(st.block_generators.size() == 1);
  auto [sigma, tau] = st.block_generators[0];
  CHECK(act(sigma, pi, tau) == pi);
  CHECK(sigma != Permutation::identity(5));
}

TEST_CASE("stabilizer order matches brute force") {
  for (int r = 1; r <= 3; ++r)
    for (const auto& pi : enumerate_set_partitions(r))
      CHECK(stabilizer(pi, ColoringMap({r}, {})).order() == oracle::stabilizer_count(pi));
  auto singles = SP("[{1},{2},{_1},{_2}]");
  auto st = stabilizer(singles, ColoringMap({2}, {}));
  CHECK(st.block_group_order == 4);
  for (const auto& f : st.within) CHECK(f.order() == 1);
}
