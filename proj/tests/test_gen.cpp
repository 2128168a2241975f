// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "jbtk/gen.hpp"
#include "jbtk/maps.hpp"
#include "jbtk/regular.hpp"

namespace jbtk {
namespace {

TEST(Rng, SameSeedSameStream) {
  const TripleSpace s{{3, 2}, {2, 2}};
  EXPECT_EQ(random_element(s, full_rank_profile(s), 99), random_element(s, full_rank_profile(s), 99));
  EXPECT_FALSE(random_element(s, full_rank_profile(s), 99) == random_element(s, full_rank_profile(s), 100));
  Rng a(5), b(5);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.uniform_int(0, 1000), b.uniform_int(0, 1000));
}

TEST(Haar, UnitaryAndIsometry) {
  Rng rng(1);
  const CMatrix u = haar_unitary(4, rng);
  EXPECT_LT((u.adjoint() * u - CMatrix::Identity(4, 4)).norm(), 1e-12);
  const CMatrix v = random_isometry(5, 3, rng);
  EXPECT_LT((v.adjoint() * v - CMatrix::Identity(3, 3)).norm(), 1e-12);
  EXPECT_THROW(random_isometry(2, 3, rng), std::invalid_argument);
}

TEST(RandomElement, HonoursRankAndConditioning) {
  Rng rng(2);
  const TripleSpace s{{4, 3}, {2, 2}};
  for (int t = 0; t < 10; ++t) {
    const RankProfile p = random_rank_profile(s, rng);
    EXPECT_EQ(rank(random_element(s, p, rng)), p);
    const Element c = random_conditioned_element(s, p, rng, 0.5, 2.0);
    EXPECT_EQ(rank(c), p);
    for (double v : triple_spectrum(c).values) {
      EXPECT_GE(v, 0.5 - 1e-12);
      EXPECT_LE(v, 2.0 + 1e-12);
    }
  }
}

TEST(RandomElement, InfeasibleProfilesThrow) {
  Rng rng(3);
  const TripleSpace s{{3, 2}};
  EXPECT_THROW(random_element(s, {3}, rng), InfeasibleRecipe);
  EXPECT_THROW(random_element(s, {1, 1}, rng), InfeasibleRecipe);
  EXPECT_THROW(random_element(s, {-1}, rng), InfeasibleRecipe);
}

TEST(RandomTripotents, StructuralProperties) {
  Rng rng(4);
  const TripleSpace sq = TripleSpace::matrices(3);
  const Element u = random_unitary(sq, rng);
  EXPECT_LT((u.block(0).adjoint() * u.block(0) - CMatrix::Identity(3, 3)).norm(), 1e-12);
  EXPECT_TRUE(is_extreme_point(random_extreme(sq, rng)).extreme);
  EXPECT_THROW(random_unitary(TripleSpace::rectangular(3, 2), rng), SpaceMismatch);

  const Element h = random_hermitian(sq, rng, 1.0, 2.0);
  EXPECT_LT((h.block(0) - h.block(0).adjoint()).norm(), 1e-12);
  const auto sp = triple_spectrum(h);
  EXPECT_GE(sp.values.front(), 1.0 - 1e-12);
  EXPECT_LE(sp.values.back(), 2.0 + 1e-12);

  const TripleSpace s{{4, 2}, {2, 2}};
  const Element e = random_tripotent(s, {1, 2}, rng);
  EXPECT_LT(distance(cube(e), e), 1e-12);
  EXPECT_EQ(rank(e), (RankProfile{1, 2}));
}

TEST(Homomorphisms, GeneratedMapsPassTheirCertificates) {
  Rng rng(5);
  const TripleSpace sq{{2, 2}, {1, 1}};
  const auto jrecipe = random_unital_recipe(sq, rng);
  const LinearMap j = random_jordan_star_hom(sq, jrecipe, rng);
  EXPECT_TRUE(is_jordan_star_hom(j).passed());
  EXPECT_LT(distance(j(Element::identity(sq)), Element::identity(j.codomain())), 1e-12);

  const TripleSpace rect{{3, 2}, {1, 2}};
  const LinearMap t = random_triple_hom(rect, random_triple_recipe(rect, rng), rng);
  EXPECT_TRUE(is_triple_hom(t).passed());
  EXPECT_EQ(is_jordan_star_hom(t).outcome, Outcome::inapplicable);

  const auto etj = random_extreme_times_jordan(sq, jrecipe, std::vector<int>(jrecipe.targets.size(), 1), rng);
  EXPECT_TRUE(is_extreme_point(etj.v).extreme);
  EXPECT_LT(distance(etj.t(Element::identity(sq)), etj.v), 1e-12);
  EXPECT_TRUE(is_jordan_star_hom(etj.s).passed());
}

TEST(Homomorphisms, ExtremePreservingRecipePadsOneSide) {
  Rng rng(6);
  const TripleSpace rect{{3, 2}, {2, 2}, {1, 3}};
  for (int t = 0; t < 10; ++t) {
    const auto recipe = random_triple_recipe(rect, rng, true);
    const TripleSpace cod = recipe.codomain();
    for (std::size_t k = 0; k < cod.num_blocks(); ++k) {
      const auto src = rect.block(recipe.targets[k].terms.front().source_block);
      const int lo = std::min(src.rows, src.cols);
      EXPECT_EQ(std::min(cod.block(k).rows, cod.block(k).cols), lo);
    }
  }
}

TEST(Homomorphisms, InfeasibleRecipes) {
  Rng rng(7);
  const TripleSpace rect = TripleSpace::rectangular(3, 2);
  EXPECT_THROW(random_unital_recipe(rect, rng), InfeasibleRecipe);
  EmbeddingRecipe bad;
  bad.targets.push_back(TargetBlock{2, 2, {EmbeddingTerm{0, 1, false}}});
  EXPECT_THROW(random_triple_hom(rect, bad, rng), InfeasibleRecipe);
  bad.targets[0].terms[0].source_block = 4;
  EXPECT_THROW(random_triple_hom(rect, bad, rng), InfeasibleRecipe);
}

TEST(Counterexamples, ClosedFormsOfBothMaps) {
  const auto one = remark_nonunitary();
  EXPECT_EQ(one.map.domain(), TripleSpace::scalars(1));
  EXPECT_EQ(one.map(Element::scalars({1.0})), one.v);
  EXPECT_TRUE(is_extreme_point(one.v).extreme);

  const auto two = remark_two_isometries();
  EXPECT_EQ(two.map.codomain(), TripleSpace::rectangular(4, 2));
  EXPECT_LT(distance(two.map(Element::scalars({1.0, 0.0})), 0.5 * (two.v + two.w)), 1e-15);
  EXPECT_LT(distance(two.map(Element::scalars({0.0, 1.0})), 0.5 * (two.v - two.w)), 1e-15);
  EXPECT_NEAR(two.map(Element::scalars({1.0, 0.0})).norm(), 1.0 / std::sqrt(2.0), 1e-15);
}

}  // namespace
}  // namespace jbtk
