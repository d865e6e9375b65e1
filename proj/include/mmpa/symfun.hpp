// Symmetric polynomials in finitely many variables, Schur expansions of
// h_a e_b, and the monomial to biword correspondence.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mmpa/super_rsk.hpp"
#include "mmpa/tableaux.hpp"

namespace mmpa {

/// Integer polynomial in N variables keyed by exponent vector. Arithmetic
/// throws ResourceError on int64 overflow.
class SymPolynomial {
 public:
  explicit SymPolynomial(int nvars = 0) : nvars_(nvars) {}
  static SymPolynomial one(int nvars);

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, std::int64_t>& terms() const { return terms_; }
  std::int64_t coeff(const std::vector<int>& exponent) const;
  void add(const std::vector<int>& exponent, std::int64_t c);
  bool is_zero() const { return terms_.empty(); }
  /// True when the coefficients are invariant under the transposition (i, i+1).
  bool symmetric_under(int i) const;

  SymPolynomial operator*(const SymPolynomial& other) const;
  SymPolynomial operator-(const SymPolynomial& other) const;
  SymPolynomial operator*(std::int64_t c) const;
  friend bool operator==(const SymPolynomial&, const SymPolynomial&) = default;

 private:
  int nvars_;
  std::map<std::vector<int>, std::int64_t> terms_;
};

using SchurExpansion = std::map<Shape, std::int64_t>;

SymPolynomial schur_poly(const Shape& lambda, int nvars);
SymPolynomial complete_h(int k, int nvars);
SymPolynomial elementary_e(int k, int nvars);

/// Coefficients |SSMT'(lambda,a,b)|; zero coefficients omitted.
SchurExpansion he_expand_tableaux(const WeakComposition& a, const WeakComposition& b);
/// Product of h and e polynomials peeled into Schur polynomials.
SchurExpansion he_expand_oracle(const WeakComposition& a, const WeakComposition& b, int nvars);

struct MonomialFactor {
  bool elementary = false;  // e factor when true, h factor otherwise
  std::vector<int> variables;
};

/// Biletters (s, i) for h factor s and (t-bar, j) for e factor t, sorted.
Biword monomial_to_biword(const std::vector<MonomialFactor>& factors);

}  // namespace mmpa
