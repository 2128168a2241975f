// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "jbtk/matcore.hpp"

namespace jbtk {

/// A real-linear operator between triple spaces, stored over realified
/// coordinates [Re; Im]. Needed because Q(x) is conjugate-linear and a
/// complex matrix cannot represent it.
class RealLinearOperator {
 public:
  RealLinearOperator(TripleSpace domain, TripleSpace codomain, RMatrix matrix);

  /// Tabulates a real-linear function by evaluating it on e_k and i * e_k.
  static RealLinearOperator from_function(const TripleSpace& domain, const TripleSpace& codomain,
                                          const std::function<Element(const Element&)>& f);
  static RealLinearOperator identity(const TripleSpace& space);
  static RealLinearOperator zero(const TripleSpace& domain, const TripleSpace& codomain);

  const TripleSpace& domain() const noexcept { return domain_; }
  const TripleSpace& codomain() const noexcept { return codomain_; }
  const RMatrix& matrix() const noexcept { return matrix_; }

  Element apply(const Element& x) const;
  Element operator()(const Element& x) const { return apply(x); }

  /// Spectral norm of the realified matrix; equals the operator norm for the
  /// Hilbert-Schmidt inner product on coordinates.
  double norm() const { return spectral_norm(matrix_); }
  bool is_zero(double tol) const { return norm() <= tol; }

  /// Complex-linearity check: ||A(i x) - i A(x)|| over all real basis vectors.
  double complex_linearity_defect() const;
  /// Conjugate-linearity check: ||A(i x) + i A(x)||.
  double conjugate_linearity_defect() const;

  /// Real rank of the realified matrix; a complex-linear operator has twice its complex rank.
  int real_rank(const Tolerances& tol = {}) const { return matrix_rank(matrix_, tol); }

  RealLinearOperator& operator+=(const RealLinearOperator& other);
  RealLinearOperator& operator-=(const RealLinearOperator& other);
  RealLinearOperator& operator*=(double s);

  friend RealLinearOperator operator+(RealLinearOperator a, const RealLinearOperator& b) { return a += b; }
  friend RealLinearOperator operator-(RealLinearOperator a, const RealLinearOperator& b) { return a -= b; }
  friend RealLinearOperator operator*(double s, RealLinearOperator a) { return a *= s; }
  /// Composition: (a * b)(x) = a(b(x)).
  friend RealLinearOperator operator*(const RealLinearOperator& a, const RealLinearOperator& b);

 private:
  TripleSpace domain_;
  TripleSpace codomain_;
  RMatrix matrix_;
};

/// Operator-norm distance ||a - b||.
double distance(const RealLinearOperator& a, const RealLinearOperator& b);

}  // namespace jbtk
