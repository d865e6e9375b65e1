#include "mmpa/poly.hpp"

#include <algorithm>

namespace mmpa {

CoeffPoly::CoeffPoly(long c) : CoeffPoly(mpq_class(c)) {}

CoeffPoly::CoeffPoly(const mpq_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

CoeffPoly CoeffPoly::x_power(int k, const mpq_class& c) {
  CoeffPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(k + 1, 0);
  p.coeffs_[k] = c;
  return p;
}

mpq_class CoeffPoly::coeff(int k) const { return k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : mpq_class(0); }

mpq_class CoeffPoly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void CoeffPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) { return *this += -o; }

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string format_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "(" + q.get_str() + ")";
}

std::string CoeffPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    mpq_class c = coeffs_[k];
    if (c == 0) continue;
    bool neg = c < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (k == 0 || a != 1) out += format_rational(a);
    out += mono;
  }
  return out;
}

}  // namespace mmpa
