// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Seeded generators. Every function is a pure function of its parameters
// and the generator state, so a fixed seed reproduces outputs bit for bit
// on one platform.

#include <cstdint>
#include <random>
#include <vector>

#include "jbtk/linear_map.hpp"
#include "jbtk/matcore.hpp"

namespace jbtk {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Standard complex Gaussian: (N(0,1) + i N(0,1)) / sqrt(2).
  Complex complex_gaussian();
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  ///< inclusive bounds
  bool coin() { return uniform_int(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

CMatrix gaussian_matrix(int rows, int cols, Rng& rng);
/// Haar unitary: QR of a complex Gaussian matrix with R's diagonal phases divided out.
CMatrix haar_unitary(int n, Rng& rng);
/// rows x cols with orthonormal columns (rows >= cols).
CMatrix random_isometry(int rows, int cols, Rng& rng);

using RankProfile = std::vector<int>;

RankProfile full_rank_profile(const TripleSpace& space);
/// Per block, a rank drawn uniformly from 0..min(rows, cols).
RankProfile random_rank_profile(const TripleSpace& space, Rng& rng);

/// Per block, a product of Gaussian rows x r and r x cols factors; exact rank r.
Element random_element(const TripleSpace& space, const RankProfile& ranks, Rng& rng);
Element random_element(const TripleSpace& space, const RankProfile& ranks, std::uint64_t seed);
/// Per block, U_r diag(s) V_r^* with s drawn from [smin, smax]; bounded condition number.
Element random_conditioned_element(const TripleSpace& space, const RankProfile& ranks, Rng& rng,
                                   double smin = 0.5, double smax = 2.0);
/// Random maximal partial isometry: per block U [I; 0] V or U [I, 0] V with Haar U, V.
Element random_extreme(const TripleSpace& space, Rng& rng);
/// Partial isometry of the given per-block ranks.
Element random_tripotent(const TripleSpace& space, const RankProfile& ranks, Rng& rng);
/// Haar unitary in every block of a square-block space.
Element random_unitary(const TripleSpace& space, Rng& rng);
/// Random Hermitian element of a square-block space with eigenvalues in [lo, hi].
Element random_hermitian(const TripleSpace& space, Rng& rng, double lo, double hi);

// ---------------------------------------------------------------------------
// Homomorphism recipes

/// One summand of a block-diagonal embedding: `multiplicity` copies of
/// source block `source_block`, optionally transposed.
struct EmbeddingTerm {
  std::size_t source_block = 0;
  int multiplicity = 1;
  bool transpose = false;
};

struct TargetBlock {
  int rows = 1;
  int cols = 1;
  std::vector<EmbeddingTerm> terms;
};

struct EmbeddingRecipe {
  std::vector<TargetBlock> targets;

  TripleSpace codomain() const;
};

/// Each domain block embedded once in its own square target, transpose by coin flip,
/// plus occasional extra multiplicity. Unital.
EmbeddingRecipe random_unital_recipe(const TripleSpace& domain, Rng& rng);
/// One target per domain block, transposed by coin flip and padded by 0 or 1
/// row and column. With `extreme_preserving` only the longer side is padded,
/// so the resulting triple homs map extreme points to extreme points.
EmbeddingRecipe random_triple_recipe(const TripleSpace& domain, Rng& rng, bool extreme_preserving = false);

/// x -> W diag(sigma(x_i) (x) I_mult, 0) W^* with one Haar W per target.
/// Requires square domain and square targets. Verified decisively before return.
LinearMap random_jordan_star_hom(const TripleSpace& domain, const EmbeddingRecipe& recipe, Rng& rng);
/// x -> U diag(sigma(x_i) (x) I_mult, 0) W^* with independent Haar U, W.
/// Verified decisively before return.
LinearMap random_triple_hom(const TripleSpace& domain, const EmbeddingRecipe& recipe, Rng& rng);

struct ExtremeTimesJordan {
  Element v;     ///< extreme point of the codomain with v^* v = 1 per block
  LinearMap s;   ///< unital Jordan *-homomorphism into the square space
  LinearMap t;   ///< x -> v S(x)
};

/// T = v S with S a random unital Jordan *-hom and v an isometry per block;
/// `extra_rows[k]` pads target block k (0 gives a unitary v).
ExtremeTimesJordan random_extreme_times_jordan(const TripleSpace& domain, const EmbeddingRecipe& recipe,
                                               const std::vector<int>& extra_rows, Rng& rng);

// ---------------------------------------------------------------------------
// Counterexample maps

/// lambda -> lambda v from C into the 3x2 triple, v = [[1,0],[0,1],[0,0]].
struct NonunitaryExample {
  LinearMap map;
  Element v;
};
NonunitaryExample remark_nonunitary();

/// (lambda, mu) -> lambda/2 (v + w) + mu/2 (v - w) from C (+) C into the 4x2
/// triple, v = [e1 e2], w = [e3 e4].
struct TwoIsometriesExample {
  LinearMap map;
  Element v;
  Element w;
};
TwoIsometriesExample remark_two_isometries();

}  // namespace jbtk
