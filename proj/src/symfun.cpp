#include "mmpa/symfun.hpp"

#include <algorithm>

namespace mmpa {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw ResourceError("symmetric polynomial coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw ResourceError("symmetric polynomial coefficient overflow");
  return out;
}

void check_bounds(int nvars, int degree) {
  if (nvars > 10 || degree > 10) throw ResourceError("symmetric polynomial beyond 10 variables or degree 10");
}

}  // namespace

SymPolynomial SymPolynomial::one(int nvars) {
  SymPolynomial p(nvars);
  p.add(std::vector<int>(nvars, 0), 1);
  return p;
}

std::int64_t SymPolynomial::coeff(const std::vector<int>& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void SymPolynomial::add(const std::vector<int>& exponent, std::int64_t c) {
  if (static_cast<int>(exponent.size()) != nvars_) throw std::invalid_argument("SymPolynomial: exponent length");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(exponent, c);
  if (!fresh) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

bool SymPolynomial::symmetric_under(int i) const {
  for (const auto& [e, c] : terms_) {
    auto f = e;
    std::swap(f[i], f[i + 1]);
    if (coeff(f) != c) return false;
  }
  return true;
}

SymPolynomial SymPolynomial::operator*(const SymPolynomial& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("SymPolynomial: variable count mismatch");
  SymPolynomial out(nvars_);
  for (const auto& [e, c] : terms_)
    for (const auto& [f, d] : other.terms_) {
      std::vector<int> g(nvars_);
      for (int i = 0; i < nvars_; ++i) g[i] = e[i] + f[i];
      out.add(g, checked_mul(c, d));
    }
  return out;
}

SymPolynomial SymPolynomial::operator-(const SymPolynomial& other) const {
  SymPolynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add(e, checked_mul(c, -1));
  return out;
}

SymPolynomial SymPolynomial::operator*(std::int64_t k) const {
  SymPolynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.add(e, checked_mul(c, k));
  return out;
}

SymPolynomial schur_poly(const Shape& lambda, int nvars) {
  check_bounds(nvars, lambda.size());
  SymPolynomial out(nvars);
  if (lambda.rows() > nvars) return out;
  for (const auto& t : enumerate_ssyt(lambda, nvars)) {
    std::vector<int> e(nvars, 0);
    for (const auto& row : t.rows())
      for (const auto& c : row)
        for (Letter x : c.letters()) ++e[x.value - 1];
    out.add(e, 1);
  }
  return out;
}

namespace {

void choose_exponents(int nvars, int k, bool distinct, int from, std::vector<int>& e, SymPolynomial& out) {
  if (k == 0) {
    out.add(e, 1);
    return;
  }
  for (int i = from; i < nvars; ++i) {
    ++e[i];
    choose_exponents(nvars, k - 1, distinct, distinct ? i + 1 : i, e, out);
    --e[i];
  }
}

}  // namespace

SymPolynomial complete_h(int k, int nvars) {
  check_bounds(nvars, k);
  SymPolynomial out(nvars);
  std::vector<int> e(nvars, 0);
  choose_exponents(nvars, k, false, 0, e, out);
  return out;
}

SymPolynomial elementary_e(int k, int nvars) {
  check_bounds(nvars, k);
  SymPolynomial out(nvars);
  std::vector<int> e(nvars, 0);
  choose_exponents(nvars, k, true, 0, e, out);
  return out;
}

SchurExpansion he_expand_tableaux(const WeakComposition& a, const WeakComposition& b) {
  int n = a.total() + b.total();
  check_bounds(n, n);
  SchurExpansion out;
  for (const auto& lambda : partitions_of(n)) {
    auto count = static_cast<std::int64_t>(enumerate_ssmt_prime(lambda, a, b).size());
    if (count != 0) out[lambda] = count;
  }
  return out;
}

SchurExpansion he_expand_oracle(const WeakComposition& a, const WeakComposition& b, int nvars) {
  int n = a.total() + b.total();
  if (nvars < n) throw std::invalid_argument("he_expand_oracle: fewer variables than the degree");
  check_bounds(nvars, n);
  SymPolynomial rest = SymPolynomial::one(nvars);
  for (int k : a.parts()) rest = rest * complete_h(k, nvars);
  for (int k : b.parts()) rest = rest * elementary_e(k, nvars);
  SchurExpansion out;
  while (!rest.is_zero()) {
    // The lexicographically largest exponent is dominance-maximal.
    auto [lead, c] = *rest.terms().rbegin();
    if (!std::is_sorted(lead.rbegin(), lead.rend()) || c < 0)
      throw std::logic_error("he_expand_oracle: remainder is not Schur positive");
    std::vector<int> parts;
    for (int x : lead)
      if (x > 0) parts.push_back(x);
    Shape lambda(parts);
    out[lambda] += c;
    rest = rest - schur_poly(lambda, nvars) * c;
  }
  return out;
}

Biword monomial_to_biword(const std::vector<MonomialFactor>& factors) {
  Biword w;
  int h = 0, e = 0;
  for (const auto& f : factors) {
    if (f.elementary) {
      ++e;
      auto vs = f.variables;
      std::sort(vs.begin(), vs.end());
      if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw std::invalid_argument("monomial_to_biword: repeated variable in an e factor");
      for (int j : vs) w.push_back({Multiset{bar(e)}, Multiset{plain(j)}});
    } else {
      ++h;
      for (int i : f.variables) w.push_back({Multiset{plain(h)}, Multiset{plain(i)}});
    }
  }
  for (const auto& f : factors)
    for (int v : f.variables)
      if (v < 1) throw std::invalid_argument("monomial_to_biword: variable index below 1");
  return sorted(w);
}

}  // namespace mmpa
