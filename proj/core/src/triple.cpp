// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "jbtk/triple.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jbtk {

Element triple_product(const Element& x, const Element& y, const Element& z) {
  require_same_space(x, y, "triple_product");
  require_same_space(x, z, "triple_product");
  std::vector<CMatrix> blocks;
  blocks.reserve(x.num_blocks());
  for (std::size_t k = 0; k < x.num_blocks(); ++k) {
    const CMatrix& a = x.block(k);
    const CMatrix& c = z.block(k);
    const CMatrix yh = y.block(k).adjoint();
    blocks.push_back(0.5 * (a * yh * c + c * yh * a));
  }
  return Element(x.space(), std::move(blocks));
}

Element cube(const Element& x) { return triple_product(x, x, x); }

RealLinearOperator l_operator(const Element& a, const Element& b) {
  require_same_space(a, b, "l_operator");
  return RealLinearOperator::from_function(a.space(), a.space(),
                                           [&](const Element& x) { return triple_product(a, b, x); });
}

RealLinearOperator q_operator(const Element& a) {
  return RealLinearOperator::from_function(a.space(), a.space(),
                                           [&](const Element& y) { return triple_product(a, y, a); });
}

RealLinearOperator bergmann(const Element& x, const Element& y) {
  require_same_space(x, y, "bergmann");
  return RealLinearOperator::identity(x.space()) - 2.0 * l_operator(x, y) + q_operator(x) * q_operator(y);
}

RealLinearOperator bergmann_closed_form(const Element& x, const Element& y) {
  require_same_space(x, y, "bergmann_closed_form");
  std::vector<CMatrix> left, right;
  for (std::size_t k = 0; k < x.num_blocks(); ++k) {
    const auto& s = x.space().block(k);
    left.push_back(CMatrix::Identity(s.rows, s.rows) - x.block(k) * y.block(k).adjoint());
    right.push_back(CMatrix::Identity(s.cols, s.cols) - y.block(k).adjoint() * x.block(k));
  }
  return RealLinearOperator::from_function(x.space(), x.space(), [&](const Element& z) {
    std::vector<CMatrix> out;
    for (std::size_t k = 0; k < z.num_blocks(); ++k) out.push_back(left[k] * z.block(k) * right[k]);
    return Element(z.space(), std::move(out));
  });
}

// ---------------------------------------------------------------------------
// Tripotents and Peirce decomposition

Tripotent Tripotent::validate(const Element& e, const Tolerances& tol) {
  const double residual = distance(cube(e), e);
  if (residual > tol.zero_tol * std::max(1.0, e.norm()))
    throw NotTripotent("element is not a tripotent: ||{e,e,e} - e|| = " + std::to_string(residual));

  Tripotent t(e);
  t.ranks_ = rank(e, tol);
  t.complete_ = true;
  t.zero_ = true;
  int d2 = 0;
  for (std::size_t k = 0; k < e.num_blocks(); ++k) {
    const auto& s = e.space().block(k);
    const int r = t.ranks_[k];
    t.complete_ = t.complete_ && (r == std::min(s.rows, s.cols));
    t.unitary_blocks_.push_back(s.square() && r == s.rows);
    t.zero_ = t.zero_ && r == 0;
    d2 += r * r;
  }
  t.minimal_ = d2 == 1;
  return t;
}

bool Tripotent::is_unitary() const noexcept {
  return std::all_of(unitary_blocks_.begin(), unitary_blocks_.end(), [](bool b) { return b; });
}

Element peirce2(const Tripotent& t, const Element& x) {
  const Element& e = t.element();
  require_same_space(e, x, "peirce2");
  std::vector<CMatrix> out;
  for (std::size_t k = 0; k < x.num_blocks(); ++k) {
    const CMatrix& b = e.block(k);
    out.push_back(b * b.adjoint() * x.block(k) * b.adjoint() * b);
  }
  return Element(x.space(), std::move(out));
}

Element peirce0(const Tripotent& t, const Element& x) {
  const Element& e = t.element();
  require_same_space(e, x, "peirce0");
  std::vector<CMatrix> out;
  for (std::size_t k = 0; k < x.num_blocks(); ++k) {
    const CMatrix& b = e.block(k);
    const auto& s = x.space().block(k);
    out.push_back((CMatrix::Identity(s.rows, s.rows) - b * b.adjoint()) * x.block(k) *
                  (CMatrix::Identity(s.cols, s.cols) - b.adjoint() * b));
  }
  return Element(x.space(), std::move(out));
}

PeirceProjections peirce_projections(const Tripotent& t) {
  const TripleSpace& space = t.space();
  auto p2 = RealLinearOperator::from_function(space, space, [&](const Element& x) { return peirce2(t, x); });
  auto p0 = RealLinearOperator::from_function(space, space, [&](const Element& x) { return peirce0(t, x); });
  auto p1 = RealLinearOperator::identity(space) - p2 - p0;
  return {std::move(p2), std::move(p1), std::move(p0)};
}

PeirceDimensions peirce_dimensions(const Tripotent& t, const Tolerances& tol) {
  const auto p = peirce_projections(t);
  PeirceDimensions d;
  d.d2 = static_cast<std::size_t>(p.p2.real_rank(tol) / 2);
  d.d1 = static_cast<std::size_t>(p.p1.real_rank(tol) / 2);
  d.d0 = static_cast<std::size_t>(p.p0.real_rank(tol) / 2);
  return d;
}

// ---------------------------------------------------------------------------
// Odd functional calculus

Element odd_calculus(const Element& a, const std::function<double(double)>& f, const Tolerances& tol) {
  const double f0 = f(0.0);
  if (!std::isfinite(f0) || std::abs(f0) > tol.zero_tol)
    throw std::domain_error("odd_calculus: f(0) must vanish");
  std::vector<CMatrix> blocks;
  blocks.reserve(a.num_blocks());
  for (std::size_t k = 0; k < a.num_blocks(); ++k) {
    const auto s = svd_block(a.block(k), k);
    const auto& shape = a.space().block(k);
    CMatrix out = CMatrix::Zero(shape.rows, shape.cols);
    // Singular values under the rank cutoff are roundoff; f(0) = 0 there.
    const int r = rank_of(s, tol);
    for (Eigen::Index i = 0; i < r; ++i) {
      const double v = f(s.sigma(i));
      if (!std::isfinite(v)) throw std::domain_error("odd_calculus: f is undefined on the triple spectrum");
      if (v != 0.0) out += v * s.U.col(i) * s.V.col(i).adjoint();
    }
    blocks.push_back(std::move(out));
  }
  return Element(a.space(), std::move(blocks));
}

Element odd_power(const Element& a, int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("odd_power: exponent must be an odd positive integer");
  return odd_calculus(a, [n](double t) { return std::pow(t, n); });
}

Element cubic_root(const Element& a) {
  return odd_calculus(a, [](double t) { return std::cbrt(t); });
}

Element iterated_cubic_root(const Element& a, int n, const Tolerances& tol) {
  if (n < 0) throw std::invalid_argument("iterated_cubic_root: n must be nonnegative");
  // One SVD, n roots on the singular values. Recomputing the SVD per step
  // would let roundoff singular values of rank-deficient blocks climb to 1.
  std::vector<CMatrix> blocks;
  for (std::size_t k = 0; k < a.num_blocks(); ++k) {
    const auto s = svd_block(a.block(k), k);
    const int r = rank_of(s, tol);
    RVector sigma = s.sigma.head(r);
    for (int i = 0; i < n; ++i) sigma = sigma.unaryExpr([](double t) { return std::cbrt(t); });
    blocks.push_back(s.U.leftCols(r) * sigma.cast<Complex>().asDiagonal() * s.V.leftCols(r).adjoint());
  }
  return Element(a.space(), std::move(blocks));
}

TripleSpectrum triple_spectrum(const Element& a, const Tolerances& tol) {
  TripleSpectrum out;
  std::vector<double> values;
  const auto decomposition = svd(a);
  for (std::size_t k = 0; k < decomposition.size(); ++k) {
    const auto& s = decomposition[k];
    const int r = rank_of(s, tol);
    if (r < s.sigma.size()) out.has_zero_singular_value = true;
    for (int i = 0; i < r; ++i) values.push_back(s.sigma(i));
  }
  std::sort(values.begin(), values.end());
  for (double v : values)
    if (out.values.empty() || v - out.values.back() > tol.zero_tol * std::max(1.0, v)) out.values.push_back(v);
  return out;
}

}  // namespace jbtk
