// Simple modules of P_r(n) and MP_{a,b}(n) on tableau bases: the diagram
// action, Garnir straightening, and the semistandard straightening of
// y-vectors.
#pragma once

#include <optional>

#include "mmpa/algebra.hpp"
#include "mmpa/tableaux.hpp"

namespace mmpa {

/// Coefficients keyed by tableau. Over set-partition content the keys mean
/// v_T; over multiset content they mean y_T.
using ModuleVector = LinearCombination<Tableau, mpq_class>;

struct ScaledTableau {
  mpq_class coeff;
  Tableau tableau;
};

/// The diagram pi acting on v_T; T has set-partition content of [r] and
/// n = |shape|. Nullopt when the result is zero. Row 1 of the result is
/// sorted; rows above may be nonstandard.
std::optional<ScaledTableau> act_on_smt(const SetPartition& pi, const Tableau& t);

struct GarnirMove {
  int row = 0;  // row of the decrease (0-based, >= 1)
  int col = 0;  // column of box a; box b is at col + 1
  std::vector<std::pair<int, int>> a_boxes, b_boxes;
};

/// Transversal terms (sign, sigma.T) of the Garnir relation, identity first.
std::vector<std::pair<int, Tableau>> garnir_terms(const Tableau& t, const GarnirMove& move);
GarnirMove garnir_move(const Tableau& t, int row, int col);

/// Column-sorts rows above row 1 and sorts row 1; returns the sign.
int canonicalize_smt(Tableau& t);
ModuleVector straighten_smt(const ModuleVector& v);
ModuleVector act_smt(const SetPartition& pi, const ModuleVector& v);
/// Relabel every content value i by g(i-1)+1.
Tableau relabel(const Permutation& g, const Tableau& t);

/// sgn(tau_S) for the carrier from S to the standardization of kappa(S);
/// 0 when some box of kappa(S) repeats a barred letter.
int lift_sign(const Tableau& s, const ColoringMap& kappa);

/// e_{a,b} v in P^lambda, by the full group sum (SMT basis).
ModuleVector project_e(const ModuleVector& v, const ColoringMap& kappa);
/// Image of y-vectors in P^lambda: y_K -> e v_{std(K)}.
ModuleVector y_to_smt(const ModuleVector& y, const ColoringMap& kappa);
/// e v_R for set-partition-content R, as y-vectors (not straightened).
ModuleVector smt_to_y(const ModuleVector& v, const ColoringMap& kappa);

ModuleVector straighten_ssmt(const ModuleVector& v);
ModuleVector y_vector(const Tableau& tt);

/// D acting on a vector over SSMT at n = |shape|.
ModuleVector mp_act(const MPElement& d, const ModuleVector& v, const WeakComposition& a, const WeakComposition& b);

/// |SSMT(lambda,a,b)|.
long module_dimension(const Shape& lambda, const WeakComposition& a, const WeakComposition& b);
/// Rank of {e v_T : T in SMT(lambda, r+s)} inside P^lambda.
long module_rank(const Shape& lambda, const WeakComposition& a, const WeakComposition& b);

}  // namespace mmpa
