#include "doctest.h"
#include "fuzz.hpp"
#include "oracles.hpp"

using namespace mmpa;
using oracle::M;
using oracle::P;
using oracle::T;

TEST_CASE("letters and multisets") {
  CHECK(parse_letter("3") == plain(3));
  CHECK(parse_letter("~3") == bar(3));
  CHECK(parse_letter("_3") == under(3));
  CHECK(parse_letter("~_3") == bar_under(3));
  CHECK(to_string(bar_under(12)) == "~_12");
  CHECK(M("{ 2 , 1 }") == Multiset{plain(1), plain(2)});
  CHECK(to_string(M("{~1,1,1}")) == "{1,1,~1}");
  CHECK(to_string(Multiset()) == "{}");
}

TEST_CASE("partitions, tableaux and biwords print canonically") {
  CHECK(to_string(P("[{~1,~_1},{1,_1}]")) == "[{1,_1},{~1,~_1}]");
  CHECK(to_string(P("[]")) == "[]");
  CHECK(to_string(T("[. . {1} | ~1 {2}]")) == "[. . {1} | {~1} {2}]");
  CHECK(to_string(parse_biword("[1 1 ~1 / 1 2 1]")) == "[1 1 ~1 / 1 2 1]");
  CHECK(to_string(parse_biword("[{1,2} / {~1}]")) == "[{1,2} / ~1]");
  CHECK(to_string(parse_shape("(3,1)")) == "(3,1)");
  CHECK(parse_shape("3,1") == Shape{3, 1});
  CHECK(to_string(parse_composition("0,2")) == "0,2");
}

TEST_CASE("polynomials, elements and vectors") {
  CHECK(to_string(parse_poly("x^2 - 1/2x + 3")) == "x^2 - (1/2)x + 3");
  CHECK(parse_poly("2x") == CoeffPoly::x_power(1, mpq_class(2)));
  auto e = parse_element("x * [{1},{_1}] + [{1,_1}]");
  CHECK(e.terms().size() == 2);
  CHECK(parse_element(to_string(e)) == e);
  CHECK(parse_element("0").is_zero());
  auto v = parse_vector("-1/2 * [. {1}]; [. | {1}]");
  CHECK(v.terms().size() == 2);
  CHECK(parse_vector(to_string(v)) == v);
  CHECK(to_string(ModuleVector()) == "0");
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_partition("[{1,_1},\n {2,");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 4);
  }
  try {
    parse_tableau("[. {1} # ]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse_letter("0"), ParseError);
  CHECK_THROWS_AS(parse_multiset("{1"), ParseError);
  CHECK_THROWS_AS(parse_biword("[1 2 / 1]"), ParseError);
  CHECK_THROWS_AS(parse_set_partition("[{1},{~_1}]"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("round trip over 1000 fuzzed values") {
  auto res = fuzz::round_trip_fuzz(1000, 20261016);
  INFO(res.first_failure);
  CHECK(res.values == 1000);
  CHECK(res.failures == 0);
}
