#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "mmpa/linalg.hpp"
#include "mmpa/verify.hpp"

using namespace mmpa;
using oracle::P;
using oracle::SP;
using oracle::T;

namespace {

WeakComposition ones(int r) { return WeakComposition(std::vector<int>(r, 1)); }

ModuleVector V(const Tableau& t) { return ModuleVector(t, mpq_class(1)); }

/// A P_r(x) element acting on P^lambda at n = |lambda|, one diagram at a time.
ModuleVector apply(const PAElement& u, const ModuleVector& v, long n) {
  ModuleVector out;
  for (const auto& [pi, c] : u.terms()) out.add(act_smt(pi, v), c.evaluate(n));
  return out;
}

/// Every arrangement of [r] into lambda that is a multiset tableau with
/// columns strictly increasing above row 1.
std::vector<Tableau> column_strict_fillings(const Shape& lambda, int r) {
  std::vector<Tableau> out;
  for (const auto& t : oracle::all_fillings(lambda, ones(r), {})) {
    if (!is_multiset_tableau(t)) continue;
    bool ok = true;
    for (int j = 0; j < t.row_length(0) && ok; ++j)
      for (int i = 2; i < t.column_height(j); ++i)
        if (!(t.at(i - 1, j) < t.at(i, j))) ok = false;
    for (int j = 1; j < t.row_length(0) && ok; ++j)
      if (!t.at(0, j - 1).empty() && !(t.at(0, j - 1) < t.at(0, j))) ok = false;
    if (ok) out.push_back(t);
  }
  return out;
}

std::optional<std::pair<int, int>> first_row_decrease(const Tableau& t) {
  for (int i = 1; i < t.num_rows(); ++i)
    for (int j = 0; j + 1 < t.row_length(i); ++j)
      if (t.at(i, j + 1) < t.at(i, j)) return std::pair{i, j};
  return std::nullopt;
}

bool supported_on(const ModuleVector& v, const std::set<Tableau>& basis) {
  for (const auto& [t, c] : v.terms())
    if (!basis.count(t)) return false;
  return true;
}

long binomial(int n, int k) {
  long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST_CASE("diagram action on a single tableau") {
  auto t = T("[. . {5} | {1,2} {4} | {3}]");
  auto id = act_on_smt(SetPartition::identity(5), t);
  REQUIRE(id);
  CHECK(id->coeff == 1);
  CHECK(id->tableau == t);

  auto moved = act_on_smt(SP("[{1,2,_3},{3,_1,_2},{5,_4,_5},{4}]"), t);
  REQUIRE(moved);
  CHECK(moved->coeff == 1);
  CHECK(moved->tableau == T("[. . {4} | {3} {5} | {1,2}]"));

  CHECK_FALSE(act_on_smt(SP("[{1,_1},{2,_2,_3},{3,_4,_5},{4,5}]"), t));

  // A closed row-1 component contributes n.
  auto split = act_on_smt(SP("[{1},{_1}]"), T("[. {1}]"));
  REQUIRE(split);
  CHECK(split->coeff == 2);
  CHECK(split->tableau == T("[. {1}]"));
  CHECK_THROWS(act_on_smt(SetPartition::identity(2), T("[. {1}]")));
}

TEST_CASE("the diagram action satisfies the module law on P_2 at n = 4") {
  auto basis = enumerate_set_partitions(2);
  for (const auto& lambda : oracle::shapes_with_tail(4, 2))
    for (const auto& t : enumerate_smt(lambda, 2)) {
      auto v = V(t);
      CHECK(act_smt(SetPartition::identity(2), v) == v);
      for (const auto& pi : basis)
        for (const auto& nu : basis) {
          auto lhs = act_smt(pi, act_smt(nu, v));
          auto rhs = apply(pa_multiply(diagram(pi), diagram(nu)), v, 4);
          REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("the diagram action satisfies the module law on random P_3 pairs at n = 6") {
  auto basis = enumerate_set_partitions(3);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (const auto& lambda : oracle::shapes_with_tail(6, 3)) {
    auto smts = enumerate_smt(lambda, 3);
    for (int trial = 0; trial < 40; ++trial) {
      auto v = V(smts[rng() % smts.size()]);
      auto pi = basis[pick(rng)], nu = basis[pick(rng)];
      CHECK(act_smt(pi, act_smt(nu, v)) == apply(pa_multiply(diagram(pi), diagram(nu)), v, 6));
    }
  }
}

TEST_CASE("straightening fixes standard tableaux and negates column swaps") {
  auto t = T("[. . {4} | {1} {3} | {2}]");
  CHECK(straighten_smt(V(t)) == V(t));
  CHECK(straighten_smt(V(T("[. . {4} | {2} {3} | {1}]"))) == ModuleVector(t, mpq_class(-1)));
  CHECK(straighten_smt(V(T("[. . {4} | {1} {3} | {2}]"))) == V(t));
  for (int r = 1; r <= 3; ++r)
    for (const auto& lambda : oracle::shapes_with_tail(2 * r, r))
      for (const auto& s : enumerate_smt(lambda, r)) CHECK(straighten_smt(V(s)) == V(s));
}

TEST_CASE("Garnir relations hold after straightening") {
  for (int r = 1; r <= 3; ++r)
    for (const auto& lambda : oracle::shapes_with_tail(2 * r, r)) {
      auto smts = enumerate_smt(lambda, r);
      std::set<Tableau> basis(smts.begin(), smts.end());
      for (const auto& t : column_strict_fillings(lambda, r)) {
        auto straight = straighten_smt(V(t));
        CHECK(supported_on(straight, basis));
        CHECK(straighten_smt(straight) == straight);
        auto dec = first_row_decrease(t);
        if (!dec) {
          CHECK(basis.count(t) == 1);
          continue;
        }
        auto move = garnir_move(t, dec->first, dec->second);
        auto terms = garnir_terms(t, move);
        int na = static_cast<int>(move.a_boxes.size()), nb = static_cast<int>(move.b_boxes.size());
        CHECK(static_cast<long>(terms.size()) == binomial(na + nb, nb));
        REQUIRE(terms[0].second == t);
        ModuleVector sum;
        for (const auto& [sign, u] : terms) sum.add(straighten_smt(V(u)), mpq_class(sign));
        CHECK(sum.is_zero());
      }
    }
}

TEST_CASE("straightened fillings span exactly the standard basis") {
  for (int r = 1; r <= 3; ++r)
    for (const auto& lambda : oracle::shapes_with_tail(2 * r, r)) {
      auto smts = enumerate_smt(lambda, r);
      std::map<Tableau, int> index;
      for (const auto& s : smts) index.emplace(s, static_cast<int>(index.size()));
      RowEchelon ech;
      for (const auto& t : column_strict_fillings(lambda, r)) {
        SparseRow row;
        auto straight = straighten_smt(V(t));
        for (const auto& [k, c] : straight.terms()) row[index.at(k)] = c;
        ech.insert(row);
      }
      CHECK(ech.rank() == static_cast<long>(smts.size()));
    }
}

TEST_CASE("y-vectors of semistandard tableaux") {
  for (const auto& [a, b] : profiles_up_to(3)) {
    int n = 2 * (a.total() + b.total());
    for (const auto& [lambda, ts] : ssmt_by_shape(a, b, n))
      for (const auto& t : ts) {
        CHECK(y_vector(t) == V(t));
        CHECK(straighten_ssmt(y_vector(t)) == y_vector(t));
      }
  }
  // A repeated even block in one column.
  CHECK(y_vector(T("[. . | {1} | {1}]")).is_zero());
  CHECK(y_vector(T("[. . {2} | {1} | {1}]")).is_zero());
}

TEST_CASE("e v_S for every lift S of a semistandard tableau is the signed image of y") {
  for (const auto& [a, b] : profiles_up_to(3)) {
    ColoringMap k(a, b);
    int n = 2 * k.size();
    auto group = young_subgroup(k);
    for (const auto& [lambda, ts] : ssmt_by_shape(a, b, n))
      for (const auto& tt : ts) {
        auto y = y_to_smt(V(tt), k);
        Tableau base = standardize_tableau(tt);
        CHECK(lift_sign(base, k) == 1);
        for (const auto& g : group) {
          Tableau s = relabel(g.perm, base);
          REQUIRE(color_tableau(k, s) == tt);
          auto ev = project_e(V(s), k);
          ModuleVector expected;
          expected.add(y, mpq_class(lift_sign(s, k)));
          CHECK(ev == expected);
        }
      }
  }
}

TEST_CASE("straightening multiset tableaux agrees with P^lambda") {
  for (const auto& [a, b] : profiles_up_to(3)) {
    ColoringMap k(a, b);
    int n = 2 * k.size();
    auto by_shape = ssmt_by_shape(a, b, n);
    for (const auto& lambda : oracle::shapes_with_tail(n, k.size())) {
      std::set<Tableau> basis(by_shape[lambda].begin(), by_shape[lambda].end());
      for (const auto& tt : oracle::all_fillings(lambda, a, b)) {
        if (!classify(tt).mt) continue;
        auto straight = y_vector(tt);
        CHECK(supported_on(straight, basis));
        auto brute = y_to_smt(V(tt), k);
        CHECK(y_to_smt(straight, k) == brute);
        CHECK(straight.is_zero() == brute.is_zero());
        bool repeated_even = false;
        for (int j = 0; j < tt.row_length(0); ++j) {
          std::set<Multiset> col;
          for (int i = 0; i < tt.column_height(j); ++i) {
            const auto& c = tt.at(i, j);
            if (!c.empty() && c.parity() == 0 && !col.insert(c).second) repeated_even = true;
          }
        }
        if (repeated_even) CHECK(brute.is_zero());
      }
    }
  }
}

TEST_CASE("module rank equals the number of semistandard tableaux") {
  CHECK(module_dimension(Shape{1, 1}, {1}, {}) == 1);
  CHECK(module_dimension(Shape{2}, {1}, {}) == 1);
  for (const auto& [a, b] : profiles_up_to(3)) {
    int n = 2 * (a.total() + b.total());
    long squares = 0;
    for (const auto& lambda : oracle::shapes_with_tail(n, a.total() + b.total())) {
      long d = module_dimension(lambda, a, b);
      CHECK(module_rank(lambda, a, b) == d);
      squares += d * d;
    }
    CHECK(squares == static_cast<long>(enumerate_restricted(a, b).size()));
  }
}

TEST_CASE("MP action: unit, representation law, and agreement with the embedding") {
  for (const auto& [a, b] : profiles_up_to(2)) {
    ColoringMap k(a, b);
    long n = 2 * k.size();
    auto restricted = enumerate_restricted(a, b);
    auto unit = mp_unit(a, b);
    for (const auto& [lambda, ts] : ssmt_by_shape(a, b, static_cast<int>(n)))
      for (const auto& t : ts) {
        auto y = V(t);
        CHECK(mp_act(unit, y, a, b) == y);
        for (const auto& p : restricted) {
          auto dp = d_basis(p);
          auto img = mp_act(dp, y, a, b);
          CHECK(y_to_smt(img, k) == apply(embed(dp, a, b), y_to_smt(y, k), n));
          for (const auto& q : restricted) {
            auto dq = d_basis(q);
            REQUIRE(mp_act(mp_multiply(dp, dq, a, b), y, a, b) == mp_act(dp, mp_act(dq, y, a, b), a, b));
          }
        }
      }
  }
}

TEST_CASE("worked MP action with a = (2,2), b = (2), n = 6") {
  ColoringMap k({2, 2}, {2});
  auto pi = SP("[{1,2,_1},{3,_2},{_3,_4},{6,_6},{4},{5},{_5}]");
  CHECK(apply_coloring(k, pi).valid);
  auto tt = T("[. . {2} | {1,~1} {2} | {1,~1}]");
  // Row 2 reads {1,~1} then {2}, a decrease in last-letter order.
  CHECK(classify(tt).mt);
  CHECK_FALSE(classify(tt).ssmt);

  auto A = T("[. . {~1} | {2} {2} | {1,1,~1}]");
  auto B = T("[. . {~1} | {1,1} {2} | {2,~1}]");
  auto C = T("[. . {~1} | {2,~1} {2} | {1,1}]");
  auto D = T("[. . {~1} | {1,1,~1} {2} | {2}]");
  auto yA = y_vector(A), yB = y_vector(B), yC = y_vector(C), yD = y_vector(D);
  ModuleVector negB, negA;
  negB.add(yB, mpq_class(-1));
  negA.add(yA, mpq_class(-1));
  CHECK(yC == negB);
  CHECK(yD == negA);
  ModuleVector displayed = yA + yB;
  displayed.add(yC, mpq_class(-1));
  displayed.add(yD, mpq_class(-1));
  ModuleVector twice;
  twice.add(yA + yB, mpq_class(2));
  CHECK(displayed == twice);
  CHECK_FALSE(twice.is_zero());

  // The eight group translates collapse to four diagrams, each twice.
  std::map<SetPartition, int> signed_count;
  std::map<SetPartition, int> count;
  auto id = Permutation::identity(k.size());
  for (const auto& g : young_subgroup(k)) {
    auto moved = act(id, pi, g.perm);
    signed_count[moved] += g.sign;
    ++count[moved];
  }
  CHECK(count.size() == 4);
  int plus = 0, minus = 0;
  for (const auto& [m, c] : count) CHECK(c == 2);
  for (const auto& [m, c] : signed_count) {
    CHECK(std::abs(c) == 2);
    (c > 0 ? plus : minus) += 1;
  }
  CHECK(plus == 2);
  CHECK(minus == 2);
}
