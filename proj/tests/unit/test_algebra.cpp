#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "mmpa/verify.hpp"

using namespace mmpa;
using oracle::P;
using oracle::SP;

namespace {

const CoeffPoly kX = CoeffPoly::x_power(1);

PAElement L(const char* s) { return diagram(SP(s)); }

}  // namespace

TEST_CASE("coefficient polynomials") {
  CoeffPoly p = CoeffPoly::x_power(2, mpq_class(1, 2)) + CoeffPoly(3);
  CHECK(p.str() == "(1/2)x^2 + 3");
  CHECK((-kX).str() == "-x");
  CHECK(CoeffPoly().str() == "0");
  CHECK((p * p).coeff(4) == mpq_class(1, 4));
  CHECK((p - p).is_zero());
  CHECK(p.evaluate(2) == 5);
  CHECK((kX + 1) * (kX - 1) == CoeffPoly::x_power(2) - 1);
}

TEST_CASE("composing diagrams") {
  auto pi = SP("[{1,_2},{2},{_1}]");
  auto id = SetPartition::identity(2);
  auto c = compose_diagrams(id, pi);
  CHECK(c.diagram == pi);
  CHECK(c.middle_components == 0);
  auto s = SP("[{1},{_1}]");
  auto ss = compose_diagrams(s, s);
  CHECK(ss.diagram == s);
  CHECK(ss.middle_components == 1);

  auto top = SP("[{1,2,_1},{3,_2},{4,5,_4},{7,_7},{_3,_5},{6},{_6}]");
  auto bottom = SP("[{1,_1,_2},{_3,_5},{7,_6,_7},{2,4},{3,5},{6},{_4}]");
  auto worked = compose_diagrams(top, bottom);
  CHECK(worked.middle_components == 2);
  CHECK(worked.diagram == SP("[{1,2,_1,_2},{3,4,5},{7,_6,_7},{_3,_5},{6},{_4}]"));
  CHECK(pa_multiply(diagram(top), diagram(bottom)) == PAElement(worked.diagram, CoeffPoly::x_power(2)));
  CHECK_THROWS(compose_diagrams(id, SetPartition::identity(3)));
}

TEST_CASE("partition algebra products") {
  auto v = L("[{1,2,_2},{_1}]") + PAElement(SP("[{1},{2,_1,_2}]"), CoeffPoly(mpq_class(2, 3)));
  CHECK(pa_multiply(diagram(SetPartition::identity(2)), v) == v);
  CHECK(pa_multiply(v, diagram(SetPartition::identity(2))) == v);
  CHECK(pa_multiply(L("[{1},{_1}]"), L("[{1},{_1}]")) == PAElement(SP("[{1},{_1}]"), kX));
}

TEST_CASE("dimension of the partition algebra") {
  CHECK(enumerate_set_partitions(1).size() == 2);
  CHECK(enumerate_set_partitions(2).size() == 15);
  CHECK(enumerate_set_partitions(3).size() == 203);
}

TEST_CASE("partition algebra associativity on all triples of P_2") {
  auto basis = enumerate_set_partitions(2);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      auto ab = pa_multiply(diagram(a), diagram(b));
      for (const auto& c : basis)
        REQUIRE(pa_multiply(ab, diagram(c)) == pa_multiply(diagram(a), pa_multiply(diagram(b), diagram(c))));
    }
}

TEST_CASE("partition algebra associativity on random triples of P_3") {
  auto basis = enumerate_set_partitions(3);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = diagram(basis[pick(rng)]), b = diagram(basis[pick(rng)]), c = diagram(basis[pick(rng)]);
    CHECK(pa_multiply(pa_multiply(a, b), c) == pa_multiply(a, pa_multiply(b, c)));
  }
}

TEST_CASE("the symmetrizing idempotent") {
  CHECK(idempotent({1}, {}) == diagram(SetPartition::identity(1)));
  auto swap = SetPartition::of_permutation(Permutation::transposition(2, 0, 1));
  PAElement expected = PAElement(SetPartition::identity(2), CoeffPoly(mpq_class(1, 2)));
  expected.add(swap, CoeffPoly(mpq_class(-1, 2)));
  CHECK(idempotent({}, {2}) == expected);
  for (const auto& [a, b] : profiles_up_to(4)) {
    auto e = idempotent(a, b);
    CHECK(pa_multiply(e, e) == e);
  }
}

TEST_CASE("projection to the D-basis against explicit sandwiches") {
  CHECK(project_to_D(SP("[{1},{2},{_1},{_2}]"), {}, {2}).is_zero());
  CHECK(oracle::sandwich(SP("[{1},{2},{_1},{_2}]"), {}, {2}).is_zero());
  for (const auto& [a, b] : profiles_up_to(3)) {
    ColoringMap k(a, b);
    for (const auto& pt : enumerate_restricted(a, b)) {
      auto d = project_to_D(standardize(pt, k), a, b);
      CHECK(d == d_basis(pt));
      CHECK(embed(pt, a, b) == oracle::sandwich(standardize(pt, k), a, b));
    }
    for (const auto& pi : enumerate_set_partitions(k.size())) {
      auto brute = oracle::sandwich(pi, a, b);
      auto img = apply_coloring(k, pi);
      bool restricted = img.valid && is_restricted(img.image);
      CHECK(brute.is_zero() == !restricted);
      CHECK(embed(project_to_D(pi, a, b), a, b) == brute);
      CHECK(project_to_D(pi, a, b).is_zero() == !restricted);
    }
  }
}

TEST_CASE("carrier signs are well defined") {
  for (const auto& [a, b] : profiles_up_to(3)) {
    ColoringMap k(a, b);
    auto group = young_subgroup(k);
    for (const auto& pt : enumerate_restricted(a, b)) {
      auto base = standardize(pt, k);
      std::map<SetPartition, std::set<int>> signs;
      for (const auto& g1 : group)
        for (const auto& g2 : group) signs[act(g1.perm, base, g2.perm)].insert(g1.sign * g2.sign);
      for (const auto& [pi, s] : signs) {
        CHECK(s.size() == 1);
        CHECK(carrier_sign(pi, k) == *s.begin());
      }
    }
  }
}

TEST_CASE("multiset partition algebra small products") {
  auto prop = d_basis(P("[{1,_1}]"));
  CHECK(mp_multiply(prop, prop, {1}, {}) == prop);
  auto split = d_basis(P("[{1},{_1}]"));
  CHECK(mp_multiply(split, split, {1}, {}) == kX * split);
  CHECK(mp_unit({1}, {}) == prop);
}

TEST_CASE("D-basis closure and the embedding is multiplicative") {
  for (const auto& [a, b] : profiles_up_to(2)) {
    ColoringMap k(a, b);
    auto basis = enumerate_restricted(a, b);
    std::set<MultisetPartition> keys(basis.begin(), basis.end());
    for (const auto& p : basis)
      for (const auto& q : basis) {
        auto uv = mp_multiply(d_basis(p), d_basis(q), a, b);
        for (const auto& [key, c] : uv.terms()) CHECK(keys.count(key) == 1);
        auto lhs = pa_multiply(oracle::sandwich(standardize(p, k), a, b), oracle::sandwich(standardize(q, k), a, b));
        CHECK(embed(uv, a, b) == lhs);
      }
  }
}

TEST_CASE("multiset partition algebra unit and associativity") {
  for (const auto& [a, b] : profiles_up_to(2)) {
    auto basis = enumerate_restricted(a, b);
    auto unit = mp_unit(a, b);
    CHECK(embed(unit, a, b) == idempotent(a, b));
    for (const auto& p : basis) {
      CHECK(mp_multiply(unit, d_basis(p), a, b) == d_basis(p));
      CHECK(mp_multiply(d_basis(p), unit, a, b) == d_basis(p));
      for (const auto& q : basis) {
        auto pq = mp_multiply(d_basis(p), d_basis(q), a, b);
        for (const auto& s : basis)
          REQUIRE(mp_multiply(pq, d_basis(s), a, b) ==
                  mp_multiply(d_basis(p), mp_multiply(d_basis(q), d_basis(s), a, b), a, b));
      }
    }
  }
}

TEST_CASE("specialization") {
  auto s = SP("[{1},{_1}]");
  CHECK(specialize(PAElement(s, kX), 4) == PAElement(s, CoeffPoly(4)));
  CHECK(specialize(PAElement(), 4).is_zero());
  auto basis = enumerate_set_partitions(3);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    PAElement u = diagram(basis[pick(rng)]) + PAElement(basis[pick(rng)], kX);
    PAElement v = diagram(basis[pick(rng)]);
    CHECK(specialize(pa_multiply(specialize(u, 6), specialize(v, 6)), 6) == specialize(pa_multiply(u, v), 6));
  }
  auto u = d_basis(P("[{1},{_1}]"));
  CHECK(specialize(mp_multiply(u, u, {1}, {}), 3) == specialize(kX * u, 3));
}
