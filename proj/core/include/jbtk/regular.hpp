// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Regularity theory on matrix triples: generalized inverses, range
// tripotents, extreme points, orthogonality and Brown-Pedersen
// quasi-invertibility.
//
// Every predicate with more than one known characterization evaluates at
// least two of them and throws ConsistencyError when they disagree.

#include <optional>
#include <string>
#include <vector>

#include "jbtk/matcore.hpp"
#include "jbtk/triple.hpp"

namespace jbtk {

struct RegularityResiduals {
  double q_a_of_inverse = 0.0;  ///< ||Q(a)(a^) - a||
  double q_inverse_of_a = 0.0;  ///< ||Q(a^)(a) - a^||
};

RegularityResiduals regularity_residuals(const Element& a, const Element& a_hat);

/// a^ = (a^dagger)^*. Every finite matrix is von Neumann regular, so this never
/// fails on valid input; a failed self-check throws NumericalError with residuals.
Element generalized_inverse(const Element& a, const Tolerances& tol = {});

struct RangeTripotent {
  Tripotent tripotent;
  bool degenerate = false;   ///< a == 0; the tripotent is the zero element
  double l_residual = 0.0;   ///< ||L(a, a^) - L(r, r)||
  double q_residual = 0.0;   ///< ||Q(a) Q(a^) - P2(r)||
};

/// r(a) = U V^* over the compact SVD of each block.
RangeTripotent range_tripotent(const Element& a, const Tolerances& tol = {});

/// Per block, U_r^* x V_r where e = U_r V_r^*: the image of P2(e)x in the
/// Jordan algebra E_2(e) ~ (+) M_{r_k}, in which e maps to the identity.
std::vector<CMatrix> peirce2_coordinates(const Tripotent& e, const Element& x);
/// P2(e)(x) is invertible in the Jordan algebra E_2(e).
bool peirce2_invertible(const Tripotent& e, const Element& x, const Tolerances& tol = {});

struct ExtremeVerdict {
  bool extreme = false;
  bool rank_condition = false;      ///< tripotent and rank(1 - vv^*) * rank(1 - v^*v) = 0 per block
  bool bergmann_zero = false;       ///< B(v, v) = 0
  bool complete_tripotent = false;  ///< tripotent with P0(v) = 0
  double bergmann_norm = 0.0;
  std::string witness;              ///< first characterization that failed, empty if extreme
};

/// All three characterizations, without the agreement check.
ExtremeVerdict extreme_characterizations(const Element& v, const Tolerances& tol = {});
/// Throws ConsistencyError when the characterizations disagree.
ExtremeVerdict is_extreme_point(const Element& v, const Tolerances& tol = {});

struct OrthogonalityVerdict {
  bool orthogonal = false;
  double l_norm = 0.0;        ///< ||L(a, b)||
  double product_norm = 0.0;  ///< max(||a b^*||, ||b^* a||)
};

OrthogonalityVerdict are_orthogonal(const Element& a, const Element& b, const Tolerances& tol = {});

/// Complex dimension of {a}^perp = { x : a x^* = 0 and x^* a = 0 }.
std::size_t annihilator_dimension(const Element& a, const Tolerances& tol = {});

struct BpVerdict {
  bool quasi_invertible = false;
  bool range_extreme = false;        ///< r(a) is an extreme point
  bool bergmann_zero = false;        ///< B(a, a^) = 0
  bool trivial_annihilator = false;  ///< {a}^perp = {0}
  std::size_t annihilator_dim = 0;
  double bergmann_norm = 0.0;
  std::optional<Element> quasi_inverse;  ///< a^, when quasi-invertible
};

BpVerdict bp_characterizations(const Element& a, const Tolerances& tol = {});
/// Throws ConsistencyError when the characterizations disagree.
BpVerdict is_bp_quasi_invertible(const Element& a, const Tolerances& tol = {});

}  // namespace jbtk
