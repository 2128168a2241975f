// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Complex block-matrix arithmetic for finite-dimensional matrix triples.
//
// A TripleSpace is an l-infinity direct sum of rectangular blocks
// M_{m1 x n1} (+) ... (+) M_{mk x nk}. Elements store one dense complex
// matrix per block; every operation here is a pure function of its inputs.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "jbtk/errors.hpp"

namespace jbtk {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

struct BlockShape {
  int rows = 1;
  int cols = 1;

  bool square() const noexcept { return rows == cols; }
  int size() const noexcept { return rows * cols; }
  friend bool operator==(const BlockShape&, const BlockShape&) = default;
};

/// Numerical policy shared by every predicate in the library.
struct Tolerances {
  double zero_tol = 1e-9;       ///< absolute threshold for "is zero"
  double sv_rel_cutoff = 1e-10; ///< singular values below cutoff * sigma_max count as zero

  /// Throws std::invalid_argument unless both fields are finite and nonnegative.
  void validate() const;

  /// Singular-value threshold for a block whose largest singular value is `sigma_max`.
  double sv_threshold(double sigma_max) const noexcept;
};

class TripleSpace {
 public:
  explicit TripleSpace(std::vector<BlockShape> blocks);
  TripleSpace(std::initializer_list<BlockShape> blocks)
      : TripleSpace(std::vector<BlockShape>(blocks)) {}

  /// The full matrix algebra M_n.
  static TripleSpace matrices(int n) { return TripleSpace({BlockShape{n, n}}); }
  /// The rectangular triple M_{m x n}.
  static TripleSpace rectangular(int m, int n) { return TripleSpace({BlockShape{m, n}}); }
  /// C (+) ... (+) C with `copies` summands.
  static TripleSpace scalars(int copies);

  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  const BlockShape& block(std::size_t k) const { return blocks_.at(k); }
  const std::vector<BlockShape>& blocks() const noexcept { return blocks_; }

  /// Complex dimension: sum of rows * cols.
  std::size_t dim() const noexcept { return dim_; }
  /// Offset of block k inside the coordinate vector.
  std::size_t offset(std::size_t k) const { return offsets_.at(k); }
  /// True iff every block is square, i.e. the space is a unital C*-algebra.
  bool is_unital_cstar() const noexcept;

  friend bool operator==(const TripleSpace& a, const TripleSpace& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<BlockShape> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
};

class Element {
 public:
  /// Zero element of `space`.
  explicit Element(TripleSpace space);
  Element(TripleSpace space, std::vector<CMatrix> blocks);

  static Element zero(const TripleSpace& space) { return Element(space); }
  /// The unit of a square-block space; throws SpaceMismatch otherwise.
  static Element identity(const TripleSpace& space);
  /// Per block, [I 0] or [I; 0]: the canonical maximal partial isometry.
  static Element canonical_isometry(const TripleSpace& space);
  /// The matrix unit E_{row,col} in `block`.
  static Element matrix_unit(const TripleSpace& space, std::size_t block, int row, int col);
  /// Element with all blocks 1x1, from a list of scalars. Space is C (+) ... (+) C.
  static Element scalars(std::initializer_list<Complex> values);

  const TripleSpace& space() const noexcept { return space_; }
  std::size_t num_blocks() const noexcept { return blocks_.size(); }
  const CMatrix& block(std::size_t k) const { return blocks_.at(k); }
  const std::vector<CMatrix>& blocks() const noexcept { return blocks_; }

  /// l-infinity norm: max over blocks of the largest singular value.
  double norm() const;
  /// Frobenius norm of the coordinate vector.
  double frobenius_norm() const;
  bool is_zero(const Tolerances& tol = {}) const { return norm() <= tol.zero_tol; }

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(Complex s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Complex(-1.0, 0.0); }
  friend Element operator*(Complex s, Element a) { return a *= s; }
  friend Element operator*(Element a, Complex s) { return a *= s; }
  friend Element operator*(double s, Element a) { return a *= Complex(s, 0.0); }

  /// Exact blockwise equality of entries and space.
  friend bool operator==(const Element& a, const Element& b);

 private:
  TripleSpace space_;
  std::vector<CMatrix> blocks_;
};

/// Throws SpaceMismatch unless both elements live in the same space.
void require_same_space(const Element& a, const Element& b, const char* context);

/// Norm of a - b in the l-infinity sum norm.
double distance(const Element& a, const Element& b);

// Coordinates in the matrix-unit basis: blocks in order, row-major inside a block.
CVector to_coordinates(const Element& x);
Element from_coordinates(const TripleSpace& space, const CVector& coords);
/// The k-th matrix unit of the coordinate basis.
Element basis_element(const TripleSpace& space, std::size_t k);

// Realified coordinates: [Re(c); Im(c)], length 2 * dim.
RVector realify(const CVector& c);
CVector complexify(const RVector& r);

/// Blockwise conjugate transpose. Lives in the transposed space.
Element adjoint(const Element& x);
TripleSpace transposed(const TripleSpace& space);

struct BlockSvd {
  CMatrix U;      ///< rows x rows unitary
  RVector sigma;  ///< min(rows, cols) values, nonincreasing
  CMatrix V;      ///< cols x cols unitary
};

/// Full SVD of every block; x_k = U_k diag(sigma_k) V_k^*. Throws NumericalError on failure.
std::vector<BlockSvd> svd(const Element& x);
BlockSvd svd_block(const CMatrix& m, std::size_t block_index = 0);

/// Per block, number of singular values above the tolerance-relative cutoff.
std::vector<int> rank(const Element& x, const Tolerances& tol = {});
int rank_of(const BlockSvd& s, const Tolerances& tol);
int matrix_rank(const CMatrix& m, const Tolerances& tol = {});
int matrix_rank(const RMatrix& m, const Tolerances& tol = {});

/// Moore-Penrose inverse, computed blockwise from the SVD. Lives in the transposed space.
Element mp_inverse(const Element& a, const Tolerances& tol = {});

/// Blockwise matrix product: block k of the result is a_k * b_k.
/// Requires a_k.cols == b_k.rows; the result space is derived from the shapes.
Element multiply(const Element& a, const Element& b);

/// Largest singular value of a real or complex matrix (0 for empty matrices).
double spectral_norm(const RMatrix& m);
double spectral_norm(const CMatrix& m);

}  // namespace jbtk
