// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "jbtk/gen.hpp"
#include "jbtk/operator.hpp"

namespace jbtk {
namespace {

const TripleSpace kSpace{{2, 3}, {1, 1}};

TEST(RealLinearOperator, TabulatesAndAppliesComplexLinearMaps) {
  Rng rng(1);
  const Element a = random_element(TripleSpace::matrices(2), {2}, rng);
  const TripleSpace s = TripleSpace::matrices(2);
  const auto left = [&](const Element& x) { return multiply(a, x); };
  const auto op = RealLinearOperator::from_function(s, s, left);
  const Element x = random_element(s, {2}, rng);
  EXPECT_LT(distance(op(x), left(x)), 1e-12);
  EXPECT_LT(op.complex_linearity_defect(), 1e-12);
  EXPECT_GT(op.conjugate_linearity_defect(), 1e-3);
  EXPECT_EQ(op.real_rank(), 8);
}

TEST(RealLinearOperator, RepresentsConjugateLinearMaps) {
  const auto conj = [](const Element& x) {
    std::vector<CMatrix> b;
    for (const auto& m : x.blocks()) b.push_back(m.conjugate());
    return Element(x.space(), std::move(b));
  };
  const auto op = RealLinearOperator::from_function(kSpace, kSpace, conj);
  Rng rng(2);
  const Element x = random_element(kSpace, full_rank_profile(kSpace), rng);
  EXPECT_LT(distance(op(x), conj(x)), 1e-12);
  EXPECT_LT(op.conjugate_linearity_defect(), 1e-12);
  EXPECT_GT(op.complex_linearity_defect(), 1.0);
  EXPECT_NEAR(op.norm(), 1.0, 1e-12);
}

TEST(RealLinearOperator, AlgebraAndComposition) {
  const auto id = RealLinearOperator::identity(kSpace);
  const auto zero = RealLinearOperator::zero(kSpace, kSpace);
  EXPECT_TRUE((id - id).is_zero(1e-15));
  EXPECT_NEAR((2.0 * id).norm(), 2.0, 1e-14);
  EXPECT_NEAR(distance(id * id, id), 0.0, 1e-15);
  EXPECT_NEAR(distance(id * zero, zero), 0.0, 1e-15);
  EXPECT_EQ(id.real_rank(), static_cast<int>(2 * kSpace.dim()));
}

TEST(RealLinearOperator, ShapeChecks) {
  const auto a = RealLinearOperator::identity(kSpace);
  const auto b = RealLinearOperator::identity(TripleSpace::matrices(2));
  EXPECT_THROW(a + b, SpaceMismatch);
  EXPECT_THROW(a * b, SpaceMismatch);
  EXPECT_THROW(a(Element::zero(TripleSpace::matrices(2))), SpaceMismatch);
  EXPECT_THROW(RealLinearOperator(kSpace, kSpace, RMatrix::Zero(3, 3)), SpaceMismatch);
}

}  // namespace
}  // namespace jbtk
