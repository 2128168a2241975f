// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <string>

#include "jbtk/triple.hpp"

namespace jbtk {

namespace {

void require_unital(const TripleSpace& space, const char* what) {
  if (!space.is_unital_cstar()) throw SpaceMismatch(std::string(what) + ": requires a square-block space");
}

}  // namespace

Element jordan_mul(const Element& a, const Element& b) {
  require_same_space(a, b, "jordan_mul");
  require_unital(a.space(), "jordan_mul");
  std::vector<CMatrix> blocks;
  for (std::size_t k = 0; k < a.num_blocks(); ++k)
    blocks.push_back(0.5 * (a.block(k) * b.block(k) + b.block(k) * a.block(k)));
  return Element(a.space(), std::move(blocks));
}

Element jordan_u(const Element& a, const Element& x) {
  const Element a2 = jordan_mul(a, a);
  return 2.0 * jordan_mul(a, jordan_mul(a, x)) - jordan_mul(a2, x);
}

RealLinearOperator u_operator(const Element& a) {
  require_unital(a.space(), "u_operator");
  return RealLinearOperator::from_function(a.space(), a.space(), [&](const Element& x) { return jordan_u(a, x); });
}

Element jordan_inverse(const Element& a, const Tolerances& tol) {
  require_unital(a.space(), "jordan_inverse");
  const RealLinearOperator u = u_operator(a);
  Eigen::JacobiSVD<RMatrix> solver(u.matrix(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVector& sigma = solver.singularValues();
  const double smax = sigma(0);
  const double smin = sigma(sigma.size() - 1);
  if (smax <= tol.zero_tol || smin <= tol.sv_threshold(smax))
    throw NotInvertible("jordan_inverse: U_a is singular (sigma_min / sigma_max = " +
                        std::to_string(smax > 0.0 ? smin / smax : 0.0) + ")");

  const Element b = from_coordinates(a.space(), complexify(solver.solve(realify(to_coordinates(a)))));

  const Element one = Element::identity(a.space());
  const double scale = std::max(1.0, a.norm() * b.norm());
  const double r1 = distance(jordan_mul(a, b), one);
  const double r2 = distance(jordan_mul(jordan_mul(a, a), b), a);
  if (r1 > tol.zero_tol * scale || r2 > tol.zero_tol * scale * std::max(1.0, a.norm()))
    throw NotInvertible("jordan_inverse: defining identities fail (residuals " + std::to_string(r1) + ", " +
                        std::to_string(r2) + ")");
  return b;
}

HuaOutcome hua_check(const Element& a, const Element& b, const Tolerances& tol) {
  require_same_space(a, b, "hua_check");
  require_unital(a.space(), "hua_check");
  HuaOutcome out;
  const char* stage = "a";
  try {
    const Element a_inv = jordan_inverse(a, tol);
    stage = "b";
    const Element b_inv = jordan_inverse(b, tol);
    stage = "a - b^-1";
    const Element c_inv = jordan_inverse(a - b_inv, tol);
    stage = "a^-1 - (a - b^-1)^-1";
    const Element lhs = jordan_inverse(a_inv - c_inv, tol);
    out.residual = distance(lhs, a - jordan_u(a, b));
    out.applicable = true;
  } catch (const NotInvertible& e) {
    out.applicable = false;
    out.reason = std::string(stage) + " is not invertible: " + e.what();
  }
  return out;
}

}  // namespace jbtk
