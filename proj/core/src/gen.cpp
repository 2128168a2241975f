// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "jbtk/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "jbtk/maps.hpp"
#include "jbtk/regular.hpp"

namespace jbtk {

Complex Rng::complex_gaussian() {
  const double re = normal_(engine_);
  const double im = normal_(engine_);
  return Complex(re, im) * M_SQRT1_2;
}

double Rng::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

int Rng::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

CMatrix gaussian_matrix(int rows, int cols, Rng& rng) {
  CMatrix g(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) g(r, c) = rng.complex_gaussian();
  return g;
}

CMatrix haar_unitary(int n, Rng& rng) {
  const CMatrix g = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix& r = qr.matrixQR();
  for (int i = 0; i < n; ++i) {
    const double mag = std::abs(r(i, i));
    const Complex phase = mag > 0.0 ? r(i, i) / mag : Complex(1.0, 0.0);
    q.col(i) *= phase;
  }
  return q;
}

CMatrix random_isometry(int rows, int cols, Rng& rng) {
  if (cols > rows) throw std::invalid_argument("random_isometry: needs rows >= cols");
  return haar_unitary(rows, rng).leftCols(cols);
}

RankProfile full_rank_profile(const TripleSpace& space) {
  RankProfile p;
  for (const auto& b : space.blocks()) p.push_back(std::min(b.rows, b.cols));
  return p;
}

RankProfile random_rank_profile(const TripleSpace& space, Rng& rng) {
  RankProfile p;
  for (const auto& b : space.blocks()) p.push_back(rng.uniform_int(0, std::min(b.rows, b.cols)));
  return p;
}

namespace {

void check_profile(const TripleSpace& space, const RankProfile& ranks) {
  if (ranks.size() != space.num_blocks())
    throw InfeasibleRecipe("rank profile has " + std::to_string(ranks.size()) + " entries for " +
                           std::to_string(space.num_blocks()) + " blocks");
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    const auto& b = space.block(k);
    if (ranks[k] < 0 || ranks[k] > std::min(b.rows, b.cols))
      throw InfeasibleRecipe("rank " + std::to_string(ranks[k]) + " infeasible for block " + std::to_string(k));
  }
}

}  // namespace

Element random_element(const TripleSpace& space, const RankProfile& ranks, Rng& rng) {
  check_profile(space, ranks);
  std::vector<CMatrix> blocks;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    const auto& b = space.block(k);
    const int r = ranks[k];
    if (r == 0) {
      blocks.push_back(CMatrix::Zero(b.rows, b.cols));
      continue;
    }
    const CMatrix left = gaussian_matrix(b.rows, r, rng);
    const CMatrix right = gaussian_matrix(r, b.cols, rng);
    blocks.push_back(left * right / std::sqrt(static_cast<double>(r)));
  }
  return Element(space, std::move(blocks));
}

Element random_element(const TripleSpace& space, const RankProfile& ranks, std::uint64_t seed) {
  Rng rng(seed);
  return random_element(space, ranks, rng);
}

Element random_conditioned_element(const TripleSpace& space, const RankProfile& ranks, Rng& rng, double smin,
                                   double smax) {
  check_profile(space, ranks);
  std::vector<CMatrix> blocks;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    const auto& b = space.block(k);
    const int r = ranks[k];
    const CMatrix u = random_isometry(b.rows, r, rng);
    const CMatrix v = random_isometry(b.cols, r, rng);
    Eigen::VectorXcd s(r);
    for (int i = 0; i < r; ++i) s(i) = rng.uniform(smin, smax);
    blocks.push_back(u * s.asDiagonal() * v.adjoint());
  }
  return Element(space, std::move(blocks));
}

Element random_extreme(const TripleSpace& space, Rng& rng) {
  std::vector<CMatrix> blocks;
  for (const auto& b : space.blocks()) {
    const CMatrix u = haar_unitary(b.rows, rng);
    const CMatrix v = haar_unitary(b.cols, rng);
    if (b.rows >= b.cols)
      blocks.push_back(u.leftCols(b.cols) * v);
    else
      blocks.push_back(u * v.topRows(b.rows));
  }
  Element e(space, std::move(blocks));
  if (!is_extreme_point(e).extreme) throw NumericalError("random_extreme: generated element is not extreme");
  return e;
}

Element random_tripotent(const TripleSpace& space, const RankProfile& ranks, Rng& rng) {
  check_profile(space, ranks);
  std::vector<CMatrix> blocks;
  for (std::size_t k = 0; k < space.num_blocks(); ++k) {
    const auto& b = space.block(k);
    const CMatrix u = random_isometry(b.rows, ranks[k], rng);
    const CMatrix v = random_isometry(b.cols, ranks[k], rng);
    blocks.push_back(u * v.adjoint());
  }
  Element e(space, std::move(blocks));
  Tripotent::validate(e);
  return e;
}

Element random_unitary(const TripleSpace& space, Rng& rng) {
  if (!space.is_unital_cstar()) throw SpaceMismatch("random_unitary: space has a non-square block");
  std::vector<CMatrix> blocks;
  for (const auto& b : space.blocks()) blocks.push_back(haar_unitary(b.rows, rng));
  return Element(space, std::move(blocks));
}

Element random_hermitian(const TripleSpace& space, Rng& rng, double lo, double hi) {
  if (!space.is_unital_cstar()) throw SpaceMismatch("random_hermitian: space has a non-square block");
  std::vector<CMatrix> blocks;
  for (const auto& b : space.blocks()) {
    const CMatrix w = haar_unitary(b.rows, rng);
    Eigen::VectorXcd d(b.rows);
    for (int i = 0; i < b.rows; ++i) d(i) = rng.uniform(lo, hi);
    blocks.push_back(w * d.asDiagonal() * w.adjoint());
  }
  return Element(space, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Recipes

TripleSpace EmbeddingRecipe::codomain() const {
  std::vector<BlockShape> shapes;
  for (const auto& t : targets) shapes.push_back({t.rows, t.cols});
  return TripleSpace(std::move(shapes));
}

namespace {

BlockShape term_shape(const TripleSpace& domain, const EmbeddingTerm& term) {
  if (term.source_block >= domain.num_blocks())
    throw InfeasibleRecipe("embedding term refers to missing source block " + std::to_string(term.source_block));
  if (term.multiplicity < 1) throw InfeasibleRecipe("embedding multiplicity must be >= 1");
  const auto& s = domain.block(term.source_block);
  return term.transpose ? BlockShape{s.cols, s.rows} : s;
}

void check_recipe(const TripleSpace& domain, const EmbeddingRecipe& recipe) {
  if (recipe.targets.empty()) throw InfeasibleRecipe("recipe has no target blocks");
  for (std::size_t t = 0; t < recipe.targets.size(); ++t) {
    const auto& target = recipe.targets[t];
    int rows = 0, cols = 0;
    for (const auto& term : target.terms) {
      const auto s = term_shape(domain, term);
      rows += s.rows * term.multiplicity;
      cols += s.cols * term.multiplicity;
    }
    if (rows > target.rows || cols > target.cols)
      throw InfeasibleRecipe("target block " + std::to_string(t) + " (" + std::to_string(target.rows) + "x" +
                             std::to_string(target.cols) + ") cannot hold a " + std::to_string(rows) + "x" +
                             std::to_string(cols) + " embedding");
  }
}

// Block-diagonal placement diag(sigma(x_i) (x) I_mult, 0) for one target.
CMatrix embed(const Element& x, const TargetBlock& target) {
  CMatrix out = CMatrix::Zero(target.rows, target.cols);
  Eigen::Index r = 0, c = 0;
  for (const auto& term : target.terms) {
    const CMatrix& src = x.block(term.source_block);
    const CMatrix piece = term.transpose ? CMatrix(src.transpose()) : src;
    for (int m = 0; m < term.multiplicity; ++m) {
      out.block(r, c, piece.rows(), piece.cols()) = piece;
      r += piece.rows();
      c += piece.cols();
    }
  }
  return out;
}

bool is_unital_target(const TripleSpace& domain, const TargetBlock& target) {
  int rows = 0;
  for (const auto& term : target.terms) rows += term_shape(domain, term).rows * term.multiplicity;
  return rows == target.rows;
}

}  // namespace

EmbeddingRecipe random_unital_recipe(const TripleSpace& domain, Rng& rng) {
  if (!domain.is_unital_cstar()) throw InfeasibleRecipe("random_unital_recipe: domain must be square-block");
  EmbeddingRecipe recipe;
  int total = 0;
  for (const auto& b : domain.blocks()) total += b.rows;
  if (domain.num_blocks() > 1 && total <= 6 && rng.coin()) {
    TargetBlock target{total, total, {}};
    for (std::size_t k = 0; k < domain.num_blocks(); ++k) target.terms.push_back({k, 1, rng.coin()});
    recipe.targets.push_back(std::move(target));
  } else {
    for (std::size_t k = 0; k < domain.num_blocks(); ++k) {
      const int n = domain.block(k).rows;
      const int mult = (2 * n <= 4 && rng.uniform_int(0, 2) == 0) ? 2 : 1;
      recipe.targets.push_back({n * mult, n * mult, {{k, mult, rng.coin()}}});
    }
    std::shuffle(recipe.targets.begin(), recipe.targets.end(), std::mt19937_64(rng.uniform_int(0, 1 << 30)));
  }
  return recipe;
}

EmbeddingRecipe random_triple_recipe(const TripleSpace& domain, Rng& rng, bool extreme_preserving) {
  EmbeddingRecipe recipe;
  for (std::size_t k = 0; k < domain.num_blocks(); ++k) {
    const auto& b = domain.block(k);
    const bool t = rng.coin();
    int rows = t ? b.cols : b.rows;
    int cols = t ? b.rows : b.cols;
    if (extreme_preserving) {
      // Padding only the long side keeps full-rank images full rank.
      (rows >= cols ? rows : cols) += rng.uniform_int(0, 1);
    } else {
      rows += rng.uniform_int(0, 1);
      cols += rng.uniform_int(0, 1);
    }
    recipe.targets.push_back({rows, cols, {{k, 1, t}}});
  }
  std::shuffle(recipe.targets.begin(), recipe.targets.end(), std::mt19937_64(rng.uniform_int(0, 1 << 30)));
  return recipe;
}

LinearMap random_jordan_star_hom(const TripleSpace& domain, const EmbeddingRecipe& recipe, Rng& rng) {
  if (!domain.is_unital_cstar()) throw InfeasibleRecipe("random_jordan_star_hom: domain must be square-block");
  check_recipe(domain, recipe);
  const TripleSpace codomain = recipe.codomain();
  if (!codomain.is_unital_cstar()) throw InfeasibleRecipe("random_jordan_star_hom: targets must be square");

  std::vector<CMatrix> w;
  for (const auto& target : recipe.targets) w.push_back(haar_unitary(target.rows, rng));
  LinearMap s = LinearMap::from_function(domain, codomain, [&](const Element& x) {
    std::vector<CMatrix> blocks;
    for (std::size_t t = 0; t < recipe.targets.size(); ++t)
      blocks.push_back(w[t] * embed(x, recipe.targets[t]) * w[t].adjoint());
    return Element(codomain, std::move(blocks));
  });
  if (!is_jordan_star_hom(s, SamplingOptions{.trials = 0, .seed = 0, .tol = {}}).passed())
    throw NumericalError("random_jordan_star_hom: generated map fails the decisive check");
  return s;
}

LinearMap random_triple_hom(const TripleSpace& domain, const EmbeddingRecipe& recipe, Rng& rng) {
  check_recipe(domain, recipe);
  const TripleSpace codomain = recipe.codomain();
  std::vector<CMatrix> u, w;
  for (const auto& target : recipe.targets) {
    u.push_back(haar_unitary(target.rows, rng));
    w.push_back(haar_unitary(target.cols, rng));
  }
  LinearMap t = LinearMap::from_function(domain, codomain, [&](const Element& x) {
    std::vector<CMatrix> blocks;
    for (std::size_t k = 0; k < recipe.targets.size(); ++k)
      blocks.push_back(u[k] * embed(x, recipe.targets[k]) * w[k].adjoint());
    return Element(codomain, std::move(blocks));
  });
  if (!is_triple_hom(t).passed()) throw NumericalError("random_triple_hom: generated map fails the decisive check");
  return t;
}

ExtremeTimesJordan random_extreme_times_jordan(const TripleSpace& domain, const EmbeddingRecipe& recipe,
                                               const std::vector<int>& extra_rows, Rng& rng) {
  if (extra_rows.size() != recipe.targets.size())
    throw InfeasibleRecipe("random_extreme_times_jordan: one padding entry per target block required");
  for (const auto& target : recipe.targets)
    if (!is_unital_target(domain, target))
      throw InfeasibleRecipe("random_extreme_times_jordan: recipe must be unital");
  LinearMap s = random_jordan_star_hom(domain, recipe, rng);

  std::vector<CMatrix> v_blocks;
  std::vector<BlockShape> shapes;
  for (std::size_t k = 0; k < recipe.targets.size(); ++k) {
    if (extra_rows[k] < 0) throw InfeasibleRecipe("random_extreme_times_jordan: negative padding");
    const int n = recipe.targets[k].rows;
    v_blocks.push_back(random_isometry(n + extra_rows[k], n, rng));
    shapes.push_back({n + extra_rows[k], n});
  }
  Element v(TripleSpace(std::move(shapes)), std::move(v_blocks));
  if (!is_extreme_point(v).extreme) throw NumericalError("random_extreme_times_jordan: v is not extreme");
  LinearMap t = left_multiply(v, s);
  return {std::move(v), std::move(s), std::move(t)};
}

// ---------------------------------------------------------------------------
// Counterexamples

NonunitaryExample remark_nonunitary() {
  const TripleSpace domain = TripleSpace::scalars(1);
  const TripleSpace codomain = TripleSpace::rectangular(3, 2);
  CMatrix vb = CMatrix::Zero(3, 2);
  vb(0, 0) = 1.0;
  vb(1, 1) = 1.0;
  Element v(codomain, {vb});
  LinearMap map = LinearMap::from_function(domain, codomain, [&](const Element& x) { return x.block(0)(0, 0) * v; });
  if (!is_extreme_point(v).extreme) throw NumericalError("remark_nonunitary: v is not extreme");
  return {std::move(map), std::move(v)};
}

TwoIsometriesExample remark_two_isometries() {
  const TripleSpace domain = TripleSpace::scalars(2);
  const TripleSpace codomain = TripleSpace::rectangular(4, 2);
  CMatrix vb = CMatrix::Zero(4, 2), wb = CMatrix::Zero(4, 2);
  vb(0, 0) = vb(1, 1) = 1.0;
  wb(2, 0) = wb(3, 1) = 1.0;
  Element v(codomain, {vb});
  Element w(codomain, {wb});
  LinearMap map = LinearMap::from_function(domain, codomain, [&](const Element& x) {
    const Complex lambda = x.block(0)(0, 0);
    const Complex mu = x.block(1)(0, 0);
    return (lambda / 2.0) * (v + w) + (mu / 2.0) * (v - w);
  });
  if (!(map(Element::scalars({1.0, 1.0})) == v)) throw NumericalError("remark_two_isometries: T(1,1) != v");
  return {std::move(map), std::move(v), std::move(w)};
}

}  // namespace jbtk
