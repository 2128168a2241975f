// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "jbtk/gen.hpp"
#include "jbtk/regular.hpp"

namespace jbtk {
namespace {

TEST(GeneralizedInverse, InvertibleCaseIsInverseAdjoint) {
  Rng rng(1);
  const TripleSpace s{{3, 3}, {1, 1}};
  const Element a = random_conditioned_element(s, full_rank_profile(s), rng);
  const Element h = generalized_inverse(a);
  for (std::size_t k = 0; k < s.num_blocks(); ++k)
    EXPECT_LT((h.block(k) - a.block(k).inverse().adjoint()).norm(), 1e-10);
}

TEST(GeneralizedInverse, RegularityIdentitiesOnEveryRank) {
  Rng rng(2);
  const TripleSpace s{{4, 2}, {3, 3}};
  for (int t = 0; t < 20; ++t) {
    const Element a = random_conditioned_element(s, random_rank_profile(s, rng), rng);
    const Element h = generalized_inverse(a);
    EXPECT_EQ(h.space(), s);
    const auto r = regularity_residuals(a, h);
    EXPECT_LT(r.q_a_of_inverse, 1e-10);
    EXPECT_LT(r.q_inverse_of_a, 1e-10);
  }
}

TEST(RangeTripotent, PartialIsometryOfMatchingRank) {
  Rng rng(3);
  const TripleSpace s{{4, 3}, {2, 2}};
  const Element a = random_conditioned_element(s, {2, 1}, rng);
  const auto rt = range_tripotent(a);
  EXPECT_FALSE(rt.degenerate);
  EXPECT_EQ(rt.tripotent.ranks(), (std::vector<int>{2, 1}));
  EXPECT_LT(rt.l_residual, 1e-9);
  EXPECT_LT(rt.q_residual, 1e-9);
  // a lies in the Peirce-2 space of r(a) and is invertible there.
  EXPECT_LT(distance(peirce2(rt.tripotent, a), a), 1e-10);
  EXPECT_TRUE(peirce2_invertible(rt.tripotent, a));
  EXPECT_TRUE(range_tripotent(Element::zero(s)).degenerate);
}

TEST(ExtremePoints, CharacterizationsAgree) {
  Rng rng(4);
  const TripleSpace s{{3, 2}, {2, 2}};
  const auto yes = is_extreme_point(random_extreme(s, rng));
  EXPECT_TRUE(yes.extreme);
  EXPECT_TRUE(yes.rank_condition && yes.bergmann_zero && yes.complete_tripotent);
  EXPECT_LT(yes.bergmann_norm, 1e-10);

  const auto partial = is_extreme_point(random_tripotent(s, {1, 2}, rng));
  EXPECT_FALSE(partial.extreme);
  EXPECT_FALSE(partial.rank_condition || partial.bergmann_zero || partial.complete_tripotent);
  EXPECT_FALSE(partial.witness.empty());

  const auto scaled = is_extreme_point(0.5 * random_extreme(s, rng));
  EXPECT_FALSE(scaled.extreme);
}

TEST(ExtremePoints, UnitariesInSquareSpace) {
  Rng rng(5);
  EXPECT_TRUE(is_extreme_point(random_unitary(TripleSpace::matrices(3), rng)).extreme);
  EXPECT_TRUE(is_extreme_point(random_extreme(TripleSpace::matrices(3), rng)).extreme);
}

TEST(Orthogonality, DisjointSupportsAreOrthogonal) {
  const TripleSpace s = TripleSpace::rectangular(3, 3);
  const Element a = Element::matrix_unit(s, 0, 0, 0);
  const Element b = Element::matrix_unit(s, 0, 1, 2);
  const auto v = are_orthogonal(a, b);
  EXPECT_TRUE(v.orthogonal);
  EXPECT_LT(v.l_norm, 1e-14);
  EXPECT_FALSE(are_orthogonal(a, a + b).orthogonal);
  EXPECT_FALSE(are_orthogonal(a, Element::matrix_unit(s, 0, 0, 1)).orthogonal);
}

TEST(Annihilator, DimensionIsSumOfCorners) {
  Rng rng(6);
  const TripleSpace s{{4, 3}, {2, 2}, {1, 3}};
  for (int t = 0; t < 10; ++t) {
    const RankProfile p = random_rank_profile(s, rng);
    const Element a = random_element(s, p, rng);
    std::size_t expected = 0;
    for (std::size_t k = 0; k < s.num_blocks(); ++k)
      expected += static_cast<std::size_t>((s.block(k).rows - p[k]) * (s.block(k).cols - p[k]));
    EXPECT_EQ(annihilator_dimension(a), expected);
  }
}

TEST(BrownPedersen, QuasiInvertibleExactlyAtMaximalRank) {
  Rng rng(7);
  const TripleSpace s{{3, 2}, {2, 2}};
  const auto full = is_bp_quasi_invertible(random_conditioned_element(s, {2, 2}, rng));
  EXPECT_TRUE(full.quasi_invertible);
  EXPECT_TRUE(full.range_extreme && full.bergmann_zero && full.trivial_annihilator);
  ASSERT_TRUE(full.quasi_inverse.has_value());

  const auto deficient = is_bp_quasi_invertible(random_conditioned_element(s, {2, 1}, rng));
  EXPECT_FALSE(deficient.quasi_invertible);
  EXPECT_FALSE(deficient.range_extreme || deficient.bergmann_zero || deficient.trivial_annihilator);
  EXPECT_EQ(deficient.annihilator_dim, 1u);
  EXPECT_FALSE(deficient.quasi_inverse.has_value());
}

}  // namespace
}  // namespace jbtk
