// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "jbtk/operator.hpp"

#include <string>

namespace jbtk {

namespace {

void require_shape(const TripleSpace& a, const TripleSpace& b, const char* what) {
  if (!(a == b)) throw SpaceMismatch(std::string(what) + ": operator spaces differ");
}

// Multiplication by i on realified coordinates [Re; Im] -> [-Im; Re].
RMatrix times_i(Eigen::Index n) {
  RMatrix j = RMatrix::Zero(2 * n, 2 * n);
  j.block(0, n, n, n) = -RMatrix::Identity(n, n);
  j.block(n, 0, n, n) = RMatrix::Identity(n, n);
  return j;
}

}  // namespace

RealLinearOperator::RealLinearOperator(TripleSpace domain, TripleSpace codomain, RMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  const auto rows = static_cast<Eigen::Index>(2 * codomain_.dim());
  const auto cols = static_cast<Eigen::Index>(2 * domain_.dim());
  if (matrix_.rows() != rows || matrix_.cols() != cols)
    throw SpaceMismatch("RealLinearOperator: matrix shape does not match realified dimensions");
}

RealLinearOperator RealLinearOperator::from_function(const TripleSpace& domain, const TripleSpace& codomain,
                                                     const std::function<Element(const Element&)>& f) {
  const auto n = static_cast<Eigen::Index>(domain.dim());
  RMatrix m(static_cast<Eigen::Index>(2 * codomain.dim()), 2 * n);
  for (Eigen::Index k = 0; k < 2 * n; ++k) {
    CVector c = CVector::Zero(n);
    c(k % n) = (k < n) ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
    const Element image = f(from_coordinates(domain, c));
    if (!(image.space() == codomain)) throw SpaceMismatch("from_function: image lies outside the codomain");
    m.col(k) = realify(to_coordinates(image));
  }
  return RealLinearOperator(domain, codomain, std::move(m));
}

RealLinearOperator RealLinearOperator::identity(const TripleSpace& space) {
  const auto n = static_cast<Eigen::Index>(2 * space.dim());
  return RealLinearOperator(space, space, RMatrix::Identity(n, n));
}

RealLinearOperator RealLinearOperator::zero(const TripleSpace& domain, const TripleSpace& codomain) {
  return RealLinearOperator(domain, codomain,
                            RMatrix::Zero(static_cast<Eigen::Index>(2 * codomain.dim()),
                                          static_cast<Eigen::Index>(2 * domain.dim())));
}

Element RealLinearOperator::apply(const Element& x) const {
  if (!(x.space() == domain_)) throw SpaceMismatch("RealLinearOperator::apply: argument outside the domain");
  return from_coordinates(codomain_, complexify(matrix_ * realify(to_coordinates(x))));
}

double RealLinearOperator::complex_linearity_defect() const {
  const RMatrix lhs = matrix_ * times_i(static_cast<Eigen::Index>(domain_.dim()));
  const RMatrix rhs = times_i(static_cast<Eigen::Index>(codomain_.dim())) * matrix_;
  return spectral_norm(RMatrix(lhs - rhs));
}

double RealLinearOperator::conjugate_linearity_defect() const {
  const RMatrix lhs = matrix_ * times_i(static_cast<Eigen::Index>(domain_.dim()));
  const RMatrix rhs = times_i(static_cast<Eigen::Index>(codomain_.dim())) * matrix_;
  return spectral_norm(RMatrix(lhs + rhs));
}

RealLinearOperator& RealLinearOperator::operator+=(const RealLinearOperator& other) {
  require_shape(domain_, other.domain_, "operator+");
  require_shape(codomain_, other.codomain_, "operator+");
  matrix_ += other.matrix_;
  return *this;
}

RealLinearOperator& RealLinearOperator::operator-=(const RealLinearOperator& other) {
  require_shape(domain_, other.domain_, "operator-");
  require_shape(codomain_, other.codomain_, "operator-");
  matrix_ -= other.matrix_;
  return *this;
}

RealLinearOperator& RealLinearOperator::operator*=(double s) {
  matrix_ *= s;
  return *this;
}

RealLinearOperator operator*(const RealLinearOperator& a, const RealLinearOperator& b) {
  require_shape(a.domain_, b.codomain_, "compose");
  return RealLinearOperator(b.domain_, a.codomain_, a.matrix_ * b.matrix_);
}

double distance(const RealLinearOperator& a, const RealLinearOperator& b) { return (a - b).norm(); }

}  // namespace jbtk
