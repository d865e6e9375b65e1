// Polynomials in one indeterminate x with exact rational coefficients.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mmpa {

class CoeffPoly {
 public:
  CoeffPoly() = default;
  CoeffPoly(long c);  // NOLINT: constants convert implicitly
  CoeffPoly(const mpq_class& c);  // NOLINT
  static CoeffPoly x_power(int k, const mpq_class& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpq_class coeff(int k) const;
  mpq_class evaluate(const mpq_class& x) const;

  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  CoeffPoly& operator*=(const CoeffPoly& o);
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(CoeffPoly a, const CoeffPoly& b) { return a *= b; }
  CoeffPoly operator-() const;
  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// e.g. "(1/2)x^2 + 3", "-x", "0".
  std::string str() const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Rational in the coefficient style of CoeffPoly::str.
std::string format_rational(const mpq_class& q);

}  // namespace mmpa
