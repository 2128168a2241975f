// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "jbtk/gen.hpp"
#include "jbtk/triple.hpp"

namespace jbtk {
namespace {

// Entrywise loop evaluation of (x y^* z + z y^* x) / 2, independent of Eigen products.
CMatrix naive_triple(const CMatrix& x, const CMatrix& y, const CMatrix& z) {
  const auto m = x.rows(), n = x.cols();
  CMatrix out = CMatrix::Zero(m, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Complex acc = 0;
      for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = 0; q < m; ++q) {
          acc += x(i, p) * std::conj(y(q, p)) * z(q, j);
          acc += z(i, p) * std::conj(y(q, p)) * x(q, j);
        }
      out(i, j) = acc / 2.0;
    }
  return out;
}

const TripleSpace kMixed{{3, 2}, {2, 2}};

TEST(TripleProduct, MatchesNaiveLoops) {
  Rng rng(7);
  for (int t = 0; t < 5; ++t) {
    const Element x = random_element(kMixed, full_rank_profile(kMixed), rng);
    const Element y = random_element(kMixed, full_rank_profile(kMixed), rng);
    const Element z = random_element(kMixed, full_rank_profile(kMixed), rng);
    const Element p = triple_product(x, y, z);
    for (std::size_t k = 0; k < kMixed.num_blocks(); ++k)
      EXPECT_LT((p.block(k) - naive_triple(x.block(k), y.block(k), z.block(k))).norm(), 1e-12);
  }
}

TEST(TripleProduct, SymmetricOuterAndConjugateLinearMiddle) {
  Rng rng(8);
  const Element x = random_element(kMixed, full_rank_profile(kMixed), rng);
  const Element y = random_element(kMixed, full_rank_profile(kMixed), rng);
  const Element z = random_element(kMixed, full_rank_profile(kMixed), rng);
  const Complex i(0, 1);
  EXPECT_LT(distance(triple_product(x, y, z), triple_product(z, y, x)), 1e-12);
  EXPECT_LT(distance(triple_product(x, i * y, z), -i * triple_product(x, y, z)), 1e-12);
  EXPECT_LT(distance(triple_product(i * x, y, z), i * triple_product(x, y, z)), 1e-12);
}

TEST(TripleProduct, MismatchedSpacesThrow) {
  const Element a = Element::zero(kMixed);
  const Element b = Element::zero(TripleSpace::matrices(2));
  EXPECT_THROW(triple_product(a, a, b), SpaceMismatch);
}

TEST(Operators, LinearityTypes) {
  Rng rng(9);
  const Element a = random_element(kMixed, full_rank_profile(kMixed), rng);
  const Element b = random_element(kMixed, full_rank_profile(kMixed), rng);
  EXPECT_LT(l_operator(a, b).complex_linearity_defect(), 1e-12);
  EXPECT_LT(q_operator(a).conjugate_linearity_defect(), 1e-12);
  const Element x = random_element(kMixed, full_rank_profile(kMixed), rng);
  EXPECT_LT(distance(l_operator(a, b)(x), triple_product(a, b, x)), 1e-12);
  EXPECT_LT(distance(q_operator(a)(x), triple_product(a, x, a)), 1e-12);
}

TEST(Bergmann, AgreesWithClosedForm) {
  Rng rng(10);
  for (int t = 0; t < 5; ++t) {
    const Element x = random_element(kMixed, random_rank_profile(kMixed, rng), rng);
    const Element y = random_element(kMixed, random_rank_profile(kMixed, rng), rng);
    const double scale = std::max(1.0, x.norm() * x.norm() * y.norm() * y.norm());
    EXPECT_LT(distance(bergmann(x, y), bergmann_closed_form(x, y)) / scale, 1e-12);
  }
}

TEST(Bergmann, ZeroOnCompleteTripotentPair) {
  const Element u = Element::canonical_isometry(TripleSpace::rectangular(3, 2));
  EXPECT_LT(bergmann(u, u).norm(), 1e-12);
  const Element e = Element::matrix_unit(TripleSpace::rectangular(3, 2), 0, 0, 0);
  EXPECT_GT(bergmann(e, e).norm(), 0.5);
}

TEST(Tripotent, ValidateAndClassify) {
  const TripleSpace s{{3, 2}, {2, 2}};
  Rng rng(12);
  const Element e = random_tripotent(s, {1, 2}, rng);
  const Tripotent t = Tripotent::validate(e);
  EXPECT_EQ(t.ranks(), (std::vector<int>{1, 2}));
  EXPECT_FALSE(t.is_complete());
  EXPECT_FALSE(t.is_minimal());
  EXPECT_EQ(t.unitary_blocks(), (std::vector<bool>{false, true}));

  const Tripotent minimal = Tripotent::validate(Element::matrix_unit(s, 1, 0, 1));
  EXPECT_TRUE(minimal.is_minimal());
  const Tripotent complete = Tripotent::validate(random_extreme(s, rng));
  EXPECT_TRUE(complete.is_complete());
  EXPECT_FALSE(complete.is_unitary());
  EXPECT_TRUE(Tripotent::validate(Element::zero(s)).is_zero());

  EXPECT_THROW(Tripotent::validate(2.0 * e), NotTripotent);
}

TEST(Peirce, DimensionFormulas) {
  Rng rng(13);
  const int m = 4, n = 3;
  const TripleSpace s = TripleSpace::rectangular(m, n);
  for (int r = 0; r <= 3; ++r) {
    const Tripotent e = Tripotent::validate(random_tripotent(s, {r}, rng));
    const auto d = peirce_dimensions(e);
    EXPECT_EQ(d.d2, static_cast<std::size_t>(r * r));
    EXPECT_EQ(d.d1, static_cast<std::size_t>(r * (m - r) + r * (n - r)));
    EXPECT_EQ(d.d0, static_cast<std::size_t>((m - r) * (n - r)));
  }
}

TEST(Peirce, ProjectionsAreComplementaryIdempotents) {
  Rng rng(14);
  const Tripotent e = Tripotent::validate(random_tripotent(kMixed, {1, 1}, rng));
  const auto p = peirce_projections(e);
  const auto id = RealLinearOperator::identity(kMixed);
  EXPECT_LT(distance(p.p2 + p.p1 + p.p0, id), 1e-12);
  EXPECT_LT(distance(p.p2 * p.p2, p.p2), 1e-12);
  EXPECT_LT(distance(p.p1 * p.p1, p.p1), 1e-12);
  EXPECT_LT((p.p2 * p.p0).norm(), 1e-12);
}

// L(e,e) acts as 1, 1/2, 0 on the Peirce spaces.
TEST(Peirce, LOperatorEigenvalues) {
  Rng rng(15);
  const Tripotent e = Tripotent::validate(random_tripotent(kMixed, {1, 2}, rng));
  const auto p = peirce_projections(e);
  const auto l = l_operator(e.element(), e.element());
  EXPECT_LT(distance(l, p.p2 + 0.5 * p.p1), 1e-12);
}

TEST(OddCalculus, PowersAndRoots) {
  Rng rng(16);
  const Element a = random_element(kMixed, {2, 1}, rng);
  EXPECT_LT(distance(odd_power(a, 3), cube(a)), 1e-10 * std::pow(a.norm(), 3));
  EXPECT_LT(distance(odd_power(a, 5), triple_product(a, a, cube(a))), 1e-10 * std::pow(a.norm(), 5));
  const Element c = cubic_root(a);
  EXPECT_LT(distance(cube(c), a), 1e-10 * a.norm());
  EXPECT_EQ(rank(c), rank(a));
  EXPECT_THROW(odd_power(a, 2), std::invalid_argument);
  EXPECT_THROW(odd_calculus(a, [](double t) { return t + 1; }), std::domain_error);
  EXPECT_THROW(odd_calculus(a, [](double t) { return t > 0 ? 1 / (t - t) : 0.0; }), std::domain_error);
}

TEST(OddCalculus, IteratedRootApproachesPartialIsometry) {
  Rng rng(17);
  const Element a = random_conditioned_element(kMixed, {1, 2}, rng);
  const Element r = iterated_cubic_root(a, 25);
  EXPECT_NO_THROW(Tripotent::validate(r, Tolerances{1e-9, 1e-10}));
  EXPECT_EQ(rank(r), rank(a));
  EXPECT_LT(distance(iterated_cubic_root(a, 0), a), 1e-12);
}

TEST(TripleSpectrum, SingularValuesAscendingWithZeroFlag) {
  CMatrix b0 = CMatrix::Zero(3, 2);
  b0(0, 0) = 2.0;
  b0(1, 1) = Complex(0, 1);
  CMatrix b1 = CMatrix::Zero(2, 2);
  b1(0, 0) = 3.0;
  const auto sp = triple_spectrum(Element(kMixed, {b0, b1}));
  EXPECT_EQ(sp.values.size(), 3u);
  EXPECT_NEAR(sp.values[0], 1.0, 1e-14);
  EXPECT_NEAR(sp.values[1], 2.0, 1e-14);
  EXPECT_NEAR(sp.values[2], 3.0, 1e-14);
  EXPECT_TRUE(sp.has_zero_singular_value);
  EXPECT_FALSE(triple_spectrum(Element::identity(TripleSpace::matrices(3))).has_zero_singular_value);
}

TEST(Jordan, UOperatorIsSandwich) {
  Rng rng(18);
  const TripleSpace s{{3, 3}, {1, 1}};
  const Element a = random_element(s, full_rank_profile(s), rng);
  const Element x = random_element(s, full_rank_profile(s), rng);
  EXPECT_LT(distance(jordan_u(a, x), multiply(multiply(a, x), a)), 1e-10);
  EXPECT_LT(distance(u_operator(a)(x), jordan_u(a, x)), 1e-10);
  EXPECT_LT(distance(jordan_mul(a, x), jordan_mul(x, a)), 1e-12);
}

TEST(Jordan, InverseMatchesMatrixInverse) {
  Rng rng(19);
  const TripleSpace s{{3, 3}, {2, 2}};
  const Element a = random_conditioned_element(s, full_rank_profile(s), rng);
  const Element b = jordan_inverse(a);
  for (std::size_t k = 0; k < s.num_blocks(); ++k) EXPECT_LT((b.block(k) - a.block(k).inverse()).norm(), 1e-10);
  const Element singular = random_element(s, {2, 2}, rng);
  EXPECT_THROW(jordan_inverse(singular), NotInvertible);
  EXPECT_THROW(jordan_inverse(Element::zero(kMixed)), SpaceMismatch);
}

TEST(Jordan, HuaIdentityAndInapplicableInputs) {
  Rng rng(20);
  const TripleSpace s = TripleSpace::matrices(3);
  const Element a = random_conditioned_element(s, {3}, rng, 1.0, 2.0);
  const Element b = random_conditioned_element(s, {3}, rng, 3.0, 4.0);
  const auto h = hua_check(a, b);
  ASSERT_TRUE(h.applicable) << h.reason;
  EXPECT_LT(h.residual, 1e-8);
  const auto bad = hua_check(random_element(s, {2}, rng), b);
  EXPECT_FALSE(bad.applicable);
  EXPECT_FALSE(bad.reason.empty());
}

}  // namespace
}  // namespace jbtk
