// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "jbtk/matcore.hpp"

namespace jbtk {

/// A complex-linear map between triple spaces, stored as a
/// dim(codomain) x dim(domain) matrix over matrix-unit coordinates.
class LinearMap {
 public:
  LinearMap(TripleSpace domain, TripleSpace codomain, CMatrix matrix);

  /// Tabulates f on the matrix-unit basis. f is assumed complex-linear.
  static LinearMap from_function(const TripleSpace& domain, const TripleSpace& codomain,
                                 const std::function<Element(const Element&)>& f);
  static LinearMap identity(const TripleSpace& space);
  static LinearMap zero(const TripleSpace& domain, const TripleSpace& codomain);
  /// x -> x^t blockwise; the codomain is the transposed space.
  static LinearMap transpose(const TripleSpace& space);

  const TripleSpace& domain() const noexcept { return domain_; }
  const TripleSpace& codomain() const noexcept { return codomain_; }
  const CMatrix& matrix() const noexcept { return matrix_; }

  Element apply(const Element& x) const;
  Element operator()(const Element& x) const { return apply(x); }

  LinearMap& operator+=(const LinearMap& other);
  LinearMap& operator-=(const LinearMap& other);
  LinearMap& operator*=(Complex s);
  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  friend LinearMap operator*(Complex s, LinearMap a) { return a *= s; }
  /// Composition (a * b)(x) = a(b(x)).
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);

 private:
  TripleSpace domain_;
  TripleSpace codomain_;
  CMatrix matrix_;
};

/// Spectral norm of the difference of coordinate matrices.
double distance(const LinearMap& a, const LinearMap& b);

/// x -> v_k T(x)_k blockwise. Codomain shapes follow from the products.
LinearMap left_multiply(const Element& v, const LinearMap& t);
/// x -> T(x)_k v_k blockwise.
LinearMap right_multiply(const LinearMap& t, const Element& v);

}  // namespace jbtk
