// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "jbtk/linear_map.hpp"

#include <string>

namespace jbtk {

LinearMap::LinearMap(TripleSpace domain, TripleSpace codomain, CMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != static_cast<Eigen::Index>(codomain_.dim()) ||
      matrix_.cols() != static_cast<Eigen::Index>(domain_.dim()))
    throw SpaceMismatch("LinearMap: matrix is " + std::to_string(matrix_.rows()) + "x" +
                        std::to_string(matrix_.cols()) + ", expected " + std::to_string(codomain_.dim()) + "x" +
                        std::to_string(domain_.dim()));
}

LinearMap LinearMap::from_function(const TripleSpace& domain, const TripleSpace& codomain,
                                   const std::function<Element(const Element&)>& f) {
  CMatrix m(static_cast<Eigen::Index>(codomain.dim()), static_cast<Eigen::Index>(domain.dim()));
  for (std::size_t k = 0; k < domain.dim(); ++k) {
    const Element image = f(basis_element(domain, k));
    if (!(image.space() == codomain)) throw SpaceMismatch("LinearMap::from_function: image outside the codomain");
    m.col(static_cast<Eigen::Index>(k)) = to_coordinates(image);
  }
  return LinearMap(domain, codomain, std::move(m));
}

LinearMap LinearMap::identity(const TripleSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.dim());
  return LinearMap(space, space, CMatrix::Identity(n, n));
}

LinearMap LinearMap::zero(const TripleSpace& domain, const TripleSpace& codomain) {
  return LinearMap(domain, codomain,
                   CMatrix::Zero(static_cast<Eigen::Index>(codomain.dim()), static_cast<Eigen::Index>(domain.dim())));
}

LinearMap LinearMap::transpose(const TripleSpace& space) {
  const TripleSpace target = transposed(space);
  return from_function(space, target, [&](const Element& x) {
    std::vector<CMatrix> blocks;
    for (const auto& b : x.blocks()) blocks.push_back(b.transpose());
    return Element(target, std::move(blocks));
  });
}

Element LinearMap::apply(const Element& x) const {
  if (!(x.space() == domain_)) throw SpaceMismatch("LinearMap::apply: argument outside the domain");
  return from_coordinates(codomain_, matrix_ * to_coordinates(x));
}

LinearMap& LinearMap::operator+=(const LinearMap& other) {
  if (!(domain_ == other.domain_ && codomain_ == other.codomain_))
    throw SpaceMismatch("LinearMap::operator+: spaces differ");
  matrix_ += other.matrix_;
  return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& other) {
  if (!(domain_ == other.domain_ && codomain_ == other.codomain_))
    throw SpaceMismatch("LinearMap::operator-: spaces differ");
  matrix_ -= other.matrix_;
  return *this;
}

LinearMap& LinearMap::operator*=(Complex s) {
  matrix_ *= s;
  return *this;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  if (!(a.domain_ == b.codomain_)) throw SpaceMismatch("LinearMap composition: spaces do not chain");
  return LinearMap(b.domain_, a.codomain_, a.matrix_ * b.matrix_);
}

double distance(const LinearMap& a, const LinearMap& b) {
  if (!(a.domain() == b.domain() && a.codomain() == b.codomain()))
    throw SpaceMismatch("distance: maps act between different spaces");
  return spectral_norm(CMatrix(a.matrix() - b.matrix()));
}

LinearMap left_multiply(const Element& v, const LinearMap& t) {
  const Element probe = multiply(v, Element::zero(t.codomain()));
  return LinearMap::from_function(t.domain(), probe.space(), [&](const Element& x) { return multiply(v, t(x)); });
}

LinearMap right_multiply(const LinearMap& t, const Element& v) {
  const Element probe = multiply(Element::zero(t.codomain()), v);
  return LinearMap::from_function(t.domain(), probe.space(), [&](const Element& x) { return multiply(t(x), v); });
}

}  // namespace jbtk
