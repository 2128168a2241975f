// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "jbtk/regular.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace jbtk {

namespace {

std::string describe(const char* what, double a, double b) {
  std::ostringstream os;
  os << what << " (" << a << ", " << b << ")";
  return os.str();
}

}  // namespace

RegularityResiduals regularity_residuals(const Element& a, const Element& a_hat) {
  return {distance(triple_product(a, a_hat, a), a), distance(triple_product(a_hat, a, a_hat), a_hat)};
}

Element generalized_inverse(const Element& a, const Tolerances& tol) {
  Element a_hat = adjoint(mp_inverse(a, tol));
  const auto r = regularity_residuals(a, a_hat);
  const double cond = std::max(1.0, a.norm() * a_hat.norm());
  if (r.q_a_of_inverse > tol.zero_tol * cond * std::max(1.0, a.norm()) ||
      r.q_inverse_of_a > tol.zero_tol * cond * std::max(1.0, a_hat.norm()))
    throw NumericalError(describe("generalized_inverse: regularity identities fail; residuals", r.q_a_of_inverse,
                                  r.q_inverse_of_a));
  return a_hat;
}

RangeTripotent range_tripotent(const Element& a, const Tolerances& tol) {
  std::vector<CMatrix> blocks;
  bool all_zero = true;
  for (std::size_t k = 0; k < a.num_blocks(); ++k) {
    const auto s = svd_block(a.block(k), k);
    const int r = rank_of(s, tol);
    all_zero = all_zero && r == 0;
    blocks.push_back(s.U.leftCols(r) * s.V.leftCols(r).adjoint());
  }
  Element e(a.space(), std::move(blocks));
  RangeTripotent out{Tripotent::validate(e, tol), all_zero, 0.0, 0.0};
  if (all_zero) return out;

  const Element a_hat = generalized_inverse(a, tol);
  out.l_residual = distance(l_operator(a, a_hat), l_operator(e, e));
  out.q_residual = distance(q_operator(a) * q_operator(a_hat), peirce_projections(out.tripotent).p2);
  const double cond = std::max(1.0, a.norm() * a_hat.norm());
  if (out.l_residual > tol.zero_tol * cond || out.q_residual > tol.zero_tol * cond)
    throw NumericalError(describe("range_tripotent: L/Q identities fail; residuals", out.l_residual, out.q_residual));
  return out;
}

std::vector<CMatrix> peirce2_coordinates(const Tripotent& e, const Element& x) {
  require_same_space(e.element(), x, "peirce2_coordinates");
  std::vector<CMatrix> out;
  for (std::size_t k = 0; k < x.num_blocks(); ++k) {
    const auto s = svd_block(e.element().block(k), k);
    const int r = e.ranks()[k];
    out.push_back(s.U.leftCols(r).adjoint() * x.block(k) * s.V.leftCols(r));
  }
  return out;
}

bool peirce2_invertible(const Tripotent& e, const Element& x, const Tolerances& tol) {
  const auto coords = peirce2_coordinates(e, x);
  for (const auto& m : coords)
    if (m.size() > 0 && matrix_rank(m, tol) != m.rows()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Extreme points

ExtremeVerdict extreme_characterizations(const Element& v, const Tolerances& tol) {
  ExtremeVerdict out;

  std::optional<Tripotent> t;
  try {
    t = Tripotent::validate(v, tol);
  } catch (const NotTripotent&) {
  }

  if (t) {
    out.rank_condition = true;
    for (std::size_t k = 0; k < v.num_blocks(); ++k) {
      const auto& s = v.space().block(k);
      const CMatrix& b = v.block(k);
      const int left = matrix_rank(CMatrix(CMatrix::Identity(s.rows, s.rows) - b * b.adjoint()), tol);
      const int right = matrix_rank(CMatrix(CMatrix::Identity(s.cols, s.cols) - b.adjoint() * b), tol);
      if (left * right != 0) out.rank_condition = false;
    }
    out.complete_tripotent = peirce_projections(*t).p0.is_zero(tol.zero_tol);
  }

  out.bergmann_norm = bergmann(v, v).norm();
  out.bergmann_zero = out.bergmann_norm <= tol.zero_tol;

  out.extreme = out.rank_condition && out.bergmann_zero && out.complete_tripotent;
  if (!out.rank_condition)
    out.witness = t ? "rank(1 - vv*) * rank(1 - v*v) != 0" : "not a tripotent";
  else if (!out.bergmann_zero)
    out.witness = "B(v,v) != 0";
  else if (!out.complete_tripotent)
    out.witness = "P0(v) != 0";
  return out;
}

ExtremeVerdict is_extreme_point(const Element& v, const Tolerances& tol) {
  auto out = extreme_characterizations(v, tol);
  if (out.rank_condition != out.bergmann_zero || out.bergmann_zero != out.complete_tripotent) {
    std::ostringstream os;
    os << "is_extreme_point: characterizations disagree (rank=" << out.rank_condition
       << ", bergmann=" << out.bergmann_zero << " [norm " << out.bergmann_norm
       << "], complete=" << out.complete_tripotent << ")";
    throw ConsistencyError(os.str());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orthogonality

OrthogonalityVerdict are_orthogonal(const Element& a, const Element& b, const Tolerances& tol) {
  require_same_space(a, b, "are_orthogonal");
  OrthogonalityVerdict out;
  out.l_norm = l_operator(a, b).norm();
  for (std::size_t k = 0; k < a.num_blocks(); ++k) {
    out.product_norm = std::max(out.product_norm, spectral_norm(CMatrix(a.block(k) * b.block(k).adjoint())));
    out.product_norm = std::max(out.product_norm, spectral_norm(CMatrix(b.block(k).adjoint() * a.block(k))));
  }
  const double threshold = tol.zero_tol * std::max(1.0, a.norm() * b.norm());
  const bool by_operator = out.l_norm <= threshold;
  const bool by_products = out.product_norm <= threshold;
  if (by_operator != by_products)
    throw ConsistencyError(describe("are_orthogonal: ||L(a,b)|| and products disagree", out.l_norm,
                                    out.product_norm));
  out.orthogonal = by_operator;
  return out;
}

std::size_t annihilator_dimension(const Element& a, const Tolerances& tol) {
  const TripleSpace& space = a.space();
  const auto n = static_cast<Eigen::Index>(space.dim());
  Eigen::Index out_dim = 0;
  for (const auto& s : space.blocks()) out_dim += s.rows * s.rows + s.cols * s.cols;

  // x -> (a_k x_k^*, x_k^* a_k) stacked over blocks; conjugate-linear in x,
  // so tabulate on the real basis {e_j, i e_j}.
  RMatrix m(2 * out_dim, 2 * n);
  for (Eigen::Index j = 0; j < 2 * n; ++j) {
    CVector c = CVector::Zero(n);
    c(j % n) = j < n ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
    const Element x = from_coordinates(space, c);
    CVector image(out_dim);
    Eigen::Index pos = 0;
    for (std::size_t k = 0; k < space.num_blocks(); ++k) {
      const CMatrix left = a.block(k) * x.block(k).adjoint();
      const CMatrix right = x.block(k).adjoint() * a.block(k);
      for (Eigen::Index r = 0; r < left.rows(); ++r)
        for (Eigen::Index q = 0; q < left.cols(); ++q) image(pos++) = left(r, q);
      for (Eigen::Index r = 0; r < right.rows(); ++r)
        for (Eigen::Index q = 0; q < right.cols(); ++q) image(pos++) = right(r, q);
    }
    m.col(j) = realify(image);
  }
  const int real_rank = matrix_rank(m, tol);
  return static_cast<std::size_t>((2 * n - real_rank) / 2);
}

// ---------------------------------------------------------------------------
// Brown-Pedersen quasi-invertibility

BpVerdict bp_characterizations(const Element& a, const Tolerances& tol) {
  BpVerdict out;
  const auto r = range_tripotent(a, tol);
  out.range_extreme = is_extreme_point(r.tripotent.element(), tol).extreme;

  const Element a_hat = generalized_inverse(a, tol);
  out.bergmann_norm = bergmann(a, a_hat).norm();
  const double cond = std::max(1.0, a.norm() * a_hat.norm());
  out.bergmann_zero = out.bergmann_norm <= tol.zero_tol * cond;

  out.annihilator_dim = annihilator_dimension(a, tol);
  out.trivial_annihilator = out.annihilator_dim == 0;

  out.quasi_invertible = out.range_extreme && out.bergmann_zero && out.trivial_annihilator;
  if (out.quasi_invertible) out.quasi_inverse = a_hat;
  return out;
}

BpVerdict is_bp_quasi_invertible(const Element& a, const Tolerances& tol) {
  auto out = bp_characterizations(a, tol);
  if (out.range_extreme != out.bergmann_zero || out.bergmann_zero != out.trivial_annihilator) {
    std::ostringstream os;
    os << "is_bp_quasi_invertible: characterizations disagree (range_extreme=" << out.range_extreme
       << ", bergmann=" << out.bergmann_zero << " [norm " << out.bergmann_norm
       << "], annihilator_dim=" << out.annihilator_dim << ")";
    throw ConsistencyError(os.str());
  }
  return out;
}

}  // namespace jbtk
