// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "jbtk/gen.hpp"
#include "jbtk/maps.hpp"

namespace jbtk {
namespace {

SamplingOptions quick(std::uint64_t seed = 0) { return SamplingOptions{.trials = 20, .seed = seed, .tol = {}}; }

Outcome outcome(const ClassificationReport& r, const std::string& id) {
  const Verdict* v = r.find(id);
  EXPECT_NE(v, nullptr) << id;
  return v ? v->outcome : Outcome::inapplicable;
}

TEST(Classify, IdentityPassesEverything) {
  const TripleSpace s{{2, 2}, {1, 1}};
  const auto r = classify(LinearMap::identity(s), quick());
  for (const auto& v : r.verdicts) EXPECT_EQ(v.outcome, Outcome::pass) << v.predicate;
  ASSERT_TRUE(r.identities.has_value());
  EXPECT_EQ(r.identities->outcome, Outcome::pass);
  ASSERT_TRUE(r.factorization.has_value());
  EXPECT_TRUE(r.factorization->v_unitary);
  EXPECT_TRUE(r.alarms.empty());
  EXPECT_TRUE(std::is_sorted(r.verdicts.begin(), r.verdicts.end(),
                             [](const Verdict& a, const Verdict& b) { return a.predicate < b.predicate; }));
}

TEST(Classify, TransposeIsJordanAndTripleHom) {
  const auto t = LinearMap::transpose(TripleSpace::matrices(3));
  EXPECT_TRUE(is_jordan_star_hom(t).passed());
  EXPECT_TRUE(is_triple_hom(t).passed());
  EXPECT_TRUE(strongly_preserves_bp(t, quick()).passed());
}

TEST(Classify, ScaledIdentityBreaksExtremePoints) {
  const TripleSpace s = TripleSpace::rectangular(3, 2);
  const LinearMap t = Complex(2.0) * LinearMap::identity(s);
  const auto r = classify(t, quick());
  EXPECT_EQ(outcome(r, "triple-hom"), Outcome::fail);
  EXPECT_EQ(outcome(r, "extreme-preserver"), Outcome::fail);
  EXPECT_EQ(outcome(r, "bergmann-zero"), Outcome::fail);
  EXPECT_EQ(outcome(r, "bp-preserver"), Outcome::pass);
  EXPECT_EQ(outcome(r, "strong-bp"), Outcome::fail);
  EXPECT_EQ(outcome(r, "jordan-star-hom"), Outcome::inapplicable);
  EXPECT_FALSE(r.identities.has_value());
  EXPECT_TRUE(r.alarms.empty());
  // The first probe already fails: the canonical isometry maps to 2u.
  const Verdict* e = r.find("extreme-preserver");
  ASSERT_EQ(e->witness.size(), 1u);
  EXPECT_EQ(e->witness[0], Element::canonical_isometry(s));
}

TEST(Classify, ZeroMap) {
  const TripleSpace s = TripleSpace::matrices(2);
  const auto r = classify(LinearMap::zero(s, s), quick());
  EXPECT_EQ(outcome(r, "jordan-star-hom"), Outcome::pass);
  EXPECT_EQ(outcome(r, "triple-hom"), Outcome::pass);
  EXPECT_EQ(outcome(r, "extreme-preserver"), Outcome::fail);
  EXPECT_EQ(outcome(r, "strong-regularity"), Outcome::pass);
  EXPECT_TRUE(r.alarms.empty());
  // T(1) = 0 is the zero tripotent, so the factorization exists but v is not extreme.
  ASSERT_TRUE(r.factorization.has_value());
  EXPECT_FALSE(r.factorization->v_extreme);
}

TEST(Classify, ScalarTwoOnComplexNumbers) {
  const LinearMap t = Complex(2.0) * LinearMap::identity(TripleSpace::scalars(1));
  EXPECT_TRUE(is_jordan_star_hom(t).failed());
  EXPECT_TRUE(is_triple_hom(t).failed());
  EXPECT_THROW(factorize(t), FactorizationRefused);
}

TEST(Classify, UnitarySandwichIsTripleHomNotJordan) {
  Rng rng(3);
  const TripleSpace s = TripleSpace::matrices(3);
  const Element u = random_unitary(s, rng), w = random_unitary(s, rng);
  const LinearMap t = right_multiply(left_multiply(u, LinearMap::identity(s)), adjoint(w));
  EXPECT_TRUE(is_triple_hom(t).passed());
  EXPECT_TRUE(is_jordan_star_hom(t, quick()).failed());
  const auto r = classify(t, quick());
  EXPECT_EQ(outcome(r, "extreme-preserver"), Outcome::pass);
  EXPECT_EQ(outcome(r, "bergmann-zero"), Outcome::pass);
  EXPECT_TRUE(r.alarms.empty());
  ASSERT_TRUE(r.factorization.has_value());
  const auto& f = *r.factorization;
  EXPECT_TRUE(f.v_unitary);
  EXPECT_LT(f.left_reconstruction, 1e-10);
  EXPECT_EQ(f.prime, PrimeAlternative::unitary);
}

TEST(Classify, TwoIsometryCounterexample) {
  const auto ex = remark_two_isometries();
  const auto r = classify(ex.map, quick());
  EXPECT_EQ(outcome(r, "extreme-preserver"), Outcome::pass);
  EXPECT_EQ(outcome(r, "bergmann-zero"), Outcome::pass);
  EXPECT_EQ(outcome(r, "strong-bp"), Outcome::fail);
  EXPECT_EQ(outcome(r, "triple-hom"), Outcome::fail);
  EXPECT_TRUE(r.alarms.empty());
  EXPECT_EQ(r.find("strong-bp")->witness.front(), Element::scalars({2.0, 1.0}));
  ASSERT_TRUE(r.factorization.has_value());
  EXPECT_TRUE(r.factorization->v_isometry);
  EXPECT_FALSE(r.factorization->v_unitary);
  EXPECT_TRUE(r.factorization->left_jordan.failed());
}

TEST(Classify, NonunitaryExtremeValue) {
  const auto ex = remark_nonunitary();
  const auto r = classify(ex.map, quick());
  EXPECT_EQ(outcome(r, "extreme-preserver"), Outcome::pass);
  ASSERT_TRUE(r.factorization.has_value());
  EXPECT_TRUE(r.factorization->v_extreme);
  EXPECT_FALSE(r.factorization->v_unitary);
  EXPECT_EQ(r.factorization->prime, PrimeAlternative::isometry);
}

TEST(Classify, ExtremeTimesJordanFactorizes) {
  Rng rng(4);
  const TripleSpace s{{2, 2}, {1, 1}};
  const auto recipe = random_unital_recipe(s, rng);
  const auto etj = random_extreme_times_jordan(s, recipe, std::vector<int>(recipe.targets.size(), 1), rng);
  const auto r = classify(etj.t, quick());
  EXPECT_EQ(outcome(r, "extreme-preserver"), Outcome::pass);
  ASSERT_TRUE(r.identities.has_value());
  EXPECT_EQ(r.identities->outcome, Outcome::pass);
  ASSERT_TRUE(r.factorization.has_value());
  const auto& f = *r.factorization;
  EXPECT_TRUE(f.left_jordan.passed());
  EXPECT_LT(f.left_reconstruction, 1e-10);
  EXPECT_LT(distance(f.left, etj.s), 1e-10);
  EXPECT_LT(f.t_range_residual, 1e-10);
  EXPECT_TRUE(r.alarms.empty());
}

TEST(UnitaryIdentities, SecondOrderCatchesCornerFunctional) {
  // T(x) = x_11 * 1 sends 1 to 1 and satisfies the first-order identity, but
  // T(a^2) = (a^2)_11 differs from T(a)^2 = a_11^2 when a_12 != 0.
  const TripleSpace s = TripleSpace::matrices(2);
  const LinearMap t = LinearMap::from_function(
      s, s, [&](const Element& x) { return x.block(0)(0, 0) * Element::identity(s); });
  const auto rep = check_unitary_identities(t);
  EXPECT_EQ(rep.outcome, Outcome::fail);
  EXPECT_LT(rep.first_order, 1e-12);
  EXPECT_GT(rep.second_order, 0.1);
  EXPECT_EQ(check_unitary_identities(Complex(0.5) * LinearMap::identity(s)).outcome, Outcome::inapplicable);
  EXPECT_EQ(check_unitary_identities(LinearMap::identity(TripleSpace::rectangular(2, 3))).outcome,
            Outcome::inapplicable);
}

TEST(Predicates, JordanStarHomDetectsMissingStar) {
  // x -> i x breaks both T(a^2) = T(a)^2 and T(a^*) = T(a)^*.
  const TripleSpace s = TripleSpace::matrices(2);
  const auto v = is_jordan_star_hom(Complex(0, 1) * LinearMap::identity(s), quick());
  EXPECT_TRUE(v.failed());
  EXPECT_FALSE(v.witness.empty());
  EXPECT_GT(v.worst_residual, 0.5);
}

TEST(Predicates, TripleHomWitnessIsBasisTriple) {
  const TripleSpace s = TripleSpace::matrices(2);
  const auto v = is_triple_hom(Complex(2.0) * LinearMap::identity(s));
  ASSERT_TRUE(v.failed());
  EXPECT_EQ(v.kind, CheckKind::decisive);
  // A cube e_k -> {e_k, e_k, e_k} has the largest residual and is reported as one element.
  ASSERT_EQ(v.witness.size(), 1u);
  EXPECT_EQ(v.witness[0].norm(), 1.0);
}

TEST(Predicates, SeedsAreReproducible) {
  const auto ex = remark_two_isometries();
  const auto a = strongly_preserves_regularity(ex.map, quick(9));
  const auto b = strongly_preserves_regularity(ex.map, quick(9));
  EXPECT_EQ(a.outcome, b.outcome);
  EXPECT_EQ(a.worst_residual, b.worst_residual);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(Factorize, RefusesNonUnitalDomain) {
  EXPECT_THROW(factorize(LinearMap::identity(TripleSpace::rectangular(2, 3))), FactorizationRefused);
}

}  // namespace
}  // namespace jbtk
