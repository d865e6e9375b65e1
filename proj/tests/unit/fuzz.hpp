// Random values for every text grammar and a print/parse round-trip driver.
#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mmpa/text.hpp"

namespace fuzz {

using namespace mmpa;

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Letter letter(bool allow_underline = true) {
    return Letter{uniform(1, 12), coin(), allow_underline && coin()};
  }
  Multiset multiset(int lo, int hi, bool allow_underline = true) {
    std::vector<Letter> ls;
    int k = uniform(lo, hi);
    for (int i = 0; i < k; ++i) ls.push_back(letter(allow_underline));
    return Multiset(ls);
  }
  MultisetPartition partition() {
    std::vector<Multiset> blocks;
    int k = uniform(0, 4);
    for (int i = 0; i < k; ++i) blocks.push_back(multiset(1, 3));
    return MultisetPartition(blocks);
  }
  SetPartition set_partition() {
    int r = uniform(1, 3);
    auto all = enumerate_set_partitions(r);
    return all[static_cast<std::size_t>(uniform(0, static_cast<int>(all.size()) - 1))];
  }
  Shape shape() {
    std::vector<int> parts;
    int len = uniform(0, 4), prev = 5;
    for (int i = 0; i < len; ++i) parts.push_back(prev = uniform(1, prev));
    return Shape(parts);
  }
  Tableau tableau() {
    Shape s = shape();
    std::vector<std::vector<Multiset>> rows;
    for (int i = 0; i < s.rows(); ++i) {
      rows.emplace_back();
      int empties = i == 0 ? uniform(0, s[0]) : 0;
      for (int j = 0; j < s[i]; ++j) rows.back().push_back(j < empties ? Multiset() : multiset(1, 3, false));
    }
    return Tableau(rows);
  }
  Biword biword() {
    Biword w;
    int k = uniform(0, 5);
    for (int i = 0; i < k; ++i) w.push_back({multiset(1, 2, false), multiset(1, 2, false)});
    return w;
  }
  WeakComposition composition() {
    std::vector<int> parts;
    int k = uniform(0, 5);
    for (int i = 0; i < k; ++i) parts.push_back(uniform(0, 4));
    return WeakComposition(parts);
  }
  mpq_class rational() {
    mpq_class q(uniform(-40, 40), uniform(1, 9));
    q.canonicalize();
    return q;
  }
  CoeffPoly poly() {
    CoeffPoly p;
    int k = uniform(0, 3);
    for (int i = 0; i < k; ++i) p = p + CoeffPoly::x_power(uniform(0, 4), rational());
    return p;
  }
  MPElement element() {
    MPElement e;
    int k = uniform(0, 3);
    for (int i = 0; i < k; ++i) e.add(partition(), poly());
    return e;
  }
  ModuleVector vector() {
    ModuleVector v;
    int k = uniform(0, 3);
    for (int i = 0; i < k; ++i) v.add(tableau(), rational());
    return v;
  }

 private:
  std::mt19937 rng_;
};

/// Checks parse(print(x)) == x and print(parse(print(x))) == print(x).
template <class T, class Parse>
bool round_trip(const T& x, Parse parse, std::string& failure) {
  std::string s = to_string(x);
  try {
    T y = parse(s);
    if (!(y == x) || to_string(y) != s) {
      failure = "mismatch on \"" + s + "\"";
      return false;
    }
  } catch (const std::exception& e) {
    failure = "\"" + s + "\": " + e.what();
    return false;
  }
  return true;
}

struct FuzzResult {
  int values = 0;
  int failures = 0;
  std::string first_failure;
};

/// Round-trips count values drawn in turn from every grammar.
inline FuzzResult round_trip_fuzz(int count, unsigned seed) {
  Gen g(seed);
  FuzzResult out;
  std::vector<std::function<bool(std::string&)>> kinds = {
      [&](std::string& f) { return round_trip(g.letter(), parse_letter, f); },
      [&](std::string& f) { return round_trip(g.multiset(0, 4), parse_multiset, f); },
      [&](std::string& f) { return round_trip(g.partition(), parse_partition, f); },
      [&](std::string& f) { return round_trip(g.set_partition(), parse_set_partition, f); },
      [&](std::string& f) { return round_trip(g.tableau(), parse_tableau, f); },
      [&](std::string& f) { return round_trip(g.biword(), parse_biword, f); },
      [&](std::string& f) { return round_trip(g.composition(), parse_composition, f); },
      [&](std::string& f) { return round_trip(g.shape(), parse_shape, f); },
      [&](std::string& f) { return round_trip(g.poly(), parse_poly, f); },
      [&](std::string& f) { return round_trip(g.element(), parse_element, f); },
      [&](std::string& f) { return round_trip(g.vector(), parse_vector, f); },
  };
  for (int i = 0; i < count; ++i) {
    std::string f;
    ++out.values;
    if (!kinds[static_cast<std::size_t>(i) % kinds.size()](f)) {
      if (out.failures++ == 0) out.first_failure = f;
    }
  }
  return out;
}

}  // namespace fuzz
