// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// JB*-triple structure on matrix triples.
//
// The triple product on every block is {x,y,z} = (x y^* z + z y^* x) / 2.
// It is complex-linear in x and z and conjugate-linear in y, which is why
// every operator built from it is represented over realified coordinates.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jbtk/matcore.hpp"
#include "jbtk/operator.hpp"

namespace jbtk {

Element triple_product(const Element& x, const Element& y, const Element& z);

/// x^{[3]} = {x, x, x}.
Element cube(const Element& x);

/// L(a,b) x = {a, b, x}. Complex-linear.
RealLinearOperator l_operator(const Element& a, const Element& b);
/// Q(a) y = {a, y, a}. Conjugate-linear.
RealLinearOperator q_operator(const Element& a);
/// B(x,y) = I - 2 L(x,y) + Q(x) Q(y).
RealLinearOperator bergmann(const Element& x, const Element& y);
/// The same operator tabulated from the closed form z -> (1 - x y^*) z (1 - y^* x).
RealLinearOperator bergmann_closed_form(const Element& x, const Element& y);

class Tripotent {
 public:
  /// Throws NotTripotent unless ||{e,e,e} - e|| <= zero_tol * max(1, ||e||).
  static Tripotent validate(const Element& e, const Tolerances& tol = {});

  const Element& element() const noexcept { return element_; }
  const TripleSpace& space() const noexcept { return element_.space(); }

  /// P_0(e) = 0: per block e e^* = I or e^* e = I.
  bool is_complete() const noexcept { return complete_; }
  /// Peirce-2 space has complex dimension 1.
  bool is_minimal() const noexcept { return minimal_; }
  bool is_zero() const noexcept { return zero_; }
  /// Per block: square and unitary.
  const std::vector<bool>& unitary_blocks() const noexcept { return unitary_blocks_; }
  bool is_unitary() const noexcept;
  /// Per-block rank of e.
  const std::vector<int>& ranks() const noexcept { return ranks_; }

 private:
  explicit Tripotent(Element e) : element_(std::move(e)) {}

  Element element_;
  std::vector<int> ranks_;
  std::vector<bool> unitary_blocks_;
  bool complete_ = false;
  bool minimal_ = false;
  bool zero_ = false;
};

struct PeirceProjections {
  RealLinearOperator p2;
  RealLinearOperator p1;
  RealLinearOperator p0;
};

/// P2(e)x = e e^* x e^* e, P0(e)x = (1 - e e^*) x (1 - e^* e), P1 = I - P2 - P0.
PeirceProjections peirce_projections(const Tripotent& e);
Element peirce2(const Tripotent& e, const Element& x);
Element peirce0(const Tripotent& e, const Element& x);

/// Complex dimensions of E_2(e), E_1(e), E_0(e).
struct PeirceDimensions {
  std::size_t d2 = 0, d1 = 0, d0 = 0;
};
PeirceDimensions peirce_dimensions(const Tripotent& e, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Odd functional calculus

/// Per block, U f(Sigma) V^* from the SVD. `f` must satisfy f(0) = 0 and be
/// finite on every singular value; throws std::domain_error otherwise.
Element odd_calculus(const Element& a, const std::function<double(double)>& f, const Tolerances& tol = {});
/// x^{[n]} for odd n >= 1.
Element odd_power(const Element& a, int n);
/// The unique y in the subtriple generated by a with {y,y,y} = a.
Element cubic_root(const Element& a);
/// x^{[1/3^n]}, by n successive cubic roots of the singular values.
/// Singular values below the rank cutoff are exact zeros.
Element iterated_cubic_root(const Element& a, int n, const Tolerances& tol = {});

struct TripleSpectrum {
  std::vector<double> values;  ///< distinct nonzero singular values, ascending
  bool has_zero_singular_value = false;
};
TripleSpectrum triple_spectrum(const Element& a, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Jordan-algebra layer on square-block spaces.

/// a o b = (ab + ba) / 2.
Element jordan_mul(const Element& a, const Element& b);
/// U_a(x) = 2 a o (a o x) - a^2 o x.
Element jordan_u(const Element& a, const Element& x);
RealLinearOperator u_operator(const Element& a);
/// b with a o b = 1 and a^2 o b = a. Throws NotInvertible when U_a is singular.
Element jordan_inverse(const Element& a, const Tolerances& tol = {});

struct HuaOutcome {
  bool applicable = false;
  double residual = 0.0;  ///< meaningful only when applicable
  std::string reason;     ///< why the identity was inapplicable
};

/// ||(a^-1 - (a - b^-1)^-1)^-1 - (a - U_a(b))||. Inputs violating the
/// invertibility hypotheses come back as inapplicable, never as a pass.
HuaOutcome hua_check(const Element& a, const Element& b, const Tolerances& tol = {});

}  // namespace jbtk
