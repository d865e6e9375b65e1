// The partition algebra P_r(x), the idempotent e_{a,b}, and the mixed
// multiset partition algebra MP_{a,b}(x) in its D-basis.
#pragma once

#include <map>

#include "mmpa/partitions.hpp"
#include "mmpa/poly.hpp"

namespace mmpa {

inline bool coeff_is_zero(const CoeffPoly& c) { return c.is_zero(); }
inline bool coeff_is_zero(const mpq_class& c) { return c == 0; }

/// Finite formal sum over basis keys; zero coefficients are never stored.
template <class Key, class Coeff>
class LinearCombination {
 public:
  using Map = std::map<Key, Coeff>;

  LinearCombination() = default;
  LinearCombination(const Key& k, const Coeff& c) { add(k, c); }

  void add(const Key& k, const Coeff& c) {
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }
  void add(const LinearCombination& o, const Coeff& scale) {
    for (const auto& [k, c] : o.terms_) add(k, c * scale);
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    a.add(b, Coeff(-1));
    return a;
  }
  friend LinearCombination operator*(const Coeff& s, const LinearCombination& v) {
    LinearCombination out;
    out.add(v, s);
    return out;
  }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

using PAElement = LinearCombination<SetPartition, CoeffPoly>;
using MPElement = LinearCombination<MultisetPartition, CoeffPoly>;

struct Composition {
  SetPartition diagram;
  int middle_components = 0;
};

Composition compose_diagrams(const SetPartition& pi, const SetPartition& nu);
PAElement pa_multiply(const PAElement& u, const PAElement& v);
PAElement diagram(const SetPartition& pi);

/// (1/|S_a x S_b|) sum of sgn(tau) L_{sigma tau}; |a|+|b| <= 5.
PAElement idempotent(const WeakComposition& a, const WeakComposition& b);

/// Sign of the carrier taking standardize(kappa(pi)) to pi, or 0 when
/// kappa(pi) is not restricted.
int carrier_sign(const SetPartition& pi, const ColoringMap& kappa);
/// e L_pi e in the D-basis: zero or plus/minus one basis element.
MPElement project_to_D(const SetPartition& pi, const WeakComposition& a, const WeakComposition& b);
MPElement d_basis(const MultisetPartition& pt);
/// The unit e_{a,b} as an element of MP_{a,b}(x).
MPElement mp_unit(const WeakComposition& a, const WeakComposition& b);
MPElement mp_multiply(const MPElement& u, const MPElement& v, const WeakComposition& a, const WeakComposition& b);

/// D_pt mapped to e L_pi e in the L-basis, summed over the orbit of pi.
PAElement embed(const MultisetPartition& pt, const WeakComposition& a, const WeakComposition& b);
PAElement embed(const MPElement& u, const WeakComposition& a, const WeakComposition& b);

/// Evaluate coefficients at x = n; the result has constant coefficients.
PAElement specialize(const PAElement& u, long n);
MPElement specialize(const MPElement& u, long n);

}  // namespace mmpa
