// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "jbtk/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jbtk {

void Tolerances::validate() const {
  if (!std::isfinite(zero_tol) || zero_tol < 0.0)
    throw std::invalid_argument("zero_tol must be finite and nonnegative");
  if (!std::isfinite(sv_rel_cutoff) || sv_rel_cutoff < 0.0)
    throw std::invalid_argument("sv_rel_cutoff must be finite and nonnegative");
}

double Tolerances::sv_threshold(double sigma_max) const noexcept {
  return std::max(sv_rel_cutoff * sigma_max, 0.0);
}

// ---------------------------------------------------------------------------
// TripleSpace

TripleSpace::TripleSpace(std::vector<BlockShape> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("TripleSpace needs at least one block");
  offsets_.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    if (b.rows < 1 || b.cols < 1)
      throw std::invalid_argument("TripleSpace block dimensions must be >= 1");
    offsets_.push_back(dim_);
    dim_ += static_cast<std::size_t>(b.size());
  }
}

TripleSpace TripleSpace::scalars(int copies) {
  if (copies < 1) throw std::invalid_argument("scalars() needs at least one copy");
  return TripleSpace(std::vector<BlockShape>(static_cast<std::size_t>(copies), BlockShape{1, 1}));
}

bool TripleSpace::is_unital_cstar() const noexcept {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const BlockShape& b) { return b.square(); });
}

TripleSpace transposed(const TripleSpace& space) {
  std::vector<BlockShape> t;
  t.reserve(space.num_blocks());
  for (const auto& b : space.blocks()) t.push_back({b.cols, b.rows});
  return TripleSpace(std::move(t));
}

// ---------------------------------------------------------------------------
// Element

Element::Element(TripleSpace space) : space_(std::move(space)) {
  blocks_.reserve(space_.num_blocks());
  for (const auto& b : space_.blocks()) blocks_.push_back(CMatrix::Zero(b.rows, b.cols));
}

Element::Element(TripleSpace space, std::vector<CMatrix> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)) {
  if (blocks_.size() != space_.num_blocks())
    throw SpaceMismatch("Element: expected " + std::to_string(space_.num_blocks()) +
                        " blocks, got " + std::to_string(blocks_.size()));
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const auto& shape = space_.block(k);
    if (blocks_[k].rows() != shape.rows || blocks_[k].cols() != shape.cols)
      throw SpaceMismatch("Element: block " + std::to_string(k) + " has shape " +
                          std::to_string(blocks_[k].rows()) + "x" + std::to_string(blocks_[k].cols()) +
                          ", expected " + std::to_string(shape.rows) + "x" + std::to_string(shape.cols));
  }
}

Element Element::identity(const TripleSpace& space) {
  if (!space.is_unital_cstar()) throw SpaceMismatch("identity: space has a non-square block");
  std::vector<CMatrix> blocks;
  for (const auto& b : space.blocks()) blocks.push_back(CMatrix::Identity(b.rows, b.cols));
  return Element(space, std::move(blocks));
}

Element Element::canonical_isometry(const TripleSpace& space) {
  std::vector<CMatrix> blocks;
  for (const auto& b : space.blocks()) blocks.push_back(CMatrix::Identity(b.rows, b.cols));
  return Element(space, std::move(blocks));
}

Element Element::matrix_unit(const TripleSpace& space, std::size_t block, int row, int col) {
  Element e(space);
  const auto& shape = space.block(block);
  if (row < 0 || row >= shape.rows || col < 0 || col >= shape.cols)
    throw std::out_of_range("matrix_unit: index outside block");
  e.blocks_[block](row, col) = 1.0;
  return e;
}

Element Element::scalars(std::initializer_list<Complex> values) {
  TripleSpace space = TripleSpace::scalars(static_cast<int>(values.size()));
  std::vector<CMatrix> blocks;
  for (const auto& v : values) blocks.push_back(CMatrix::Constant(1, 1, v));
  return Element(std::move(space), std::move(blocks));
}

double Element::norm() const {
  double n = 0.0;
  for (const auto& b : blocks_) n = std::max(n, spectral_norm(b));
  return n;
}

double Element::frobenius_norm() const {
  double s = 0.0;
  for (const auto& b : blocks_) s += b.squaredNorm();
  return std::sqrt(s);
}

void require_same_space(const Element& a, const Element& b, const char* context) {
  if (!(a.space() == b.space())) throw SpaceMismatch(std::string(context) + ": operands live in different spaces");
}

Element& Element::operator+=(const Element& other) {
  require_same_space(*this, other, "operator+");
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] += other.blocks_[k];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_space(*this, other, "operator-");
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] -= other.blocks_[k];
  return *this;
}

Element& Element::operator*=(Complex s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  if (!(a.space_ == b.space_)) return false;
  for (std::size_t k = 0; k < a.blocks_.size(); ++k)
    if (a.blocks_[k] != b.blocks_[k]) return false;
  return true;
}

double distance(const Element& a, const Element& b) { return (a - b).norm(); }

// ---------------------------------------------------------------------------
// Coordinates

CVector to_coordinates(const Element& x) {
  CVector c(static_cast<Eigen::Index>(x.space().dim()));
  Eigen::Index pos = 0;
  for (const auto& b : x.blocks())
    for (Eigen::Index r = 0; r < b.rows(); ++r)
      for (Eigen::Index col = 0; col < b.cols(); ++col) c(pos++) = b(r, col);
  return c;
}

Element from_coordinates(const TripleSpace& space, const CVector& coords) {
  if (static_cast<std::size_t>(coords.size()) != space.dim())
    throw SpaceMismatch("from_coordinates: coordinate vector has length " + std::to_string(coords.size()) +
                        ", expected " + std::to_string(space.dim()));
  std::vector<CMatrix> blocks;
  blocks.reserve(space.num_blocks());
  Eigen::Index pos = 0;
  for (const auto& shape : space.blocks()) {
    CMatrix b(shape.rows, shape.cols);
    for (int r = 0; r < shape.rows; ++r)
      for (int col = 0; col < shape.cols; ++col) b(r, col) = coords(pos++);
    blocks.push_back(std::move(b));
  }
  return Element(space, std::move(blocks));
}

Element basis_element(const TripleSpace& space, std::size_t k) {
  if (k >= space.dim()) throw std::out_of_range("basis_element: index out of range");
  CVector c = CVector::Zero(static_cast<Eigen::Index>(space.dim()));
  c(static_cast<Eigen::Index>(k)) = 1.0;
  return from_coordinates(space, c);
}

RVector realify(const CVector& c) {
  RVector r(2 * c.size());
  r.head(c.size()) = c.real();
  r.tail(c.size()) = c.imag();
  return r;
}

CVector complexify(const RVector& r) {
  if (r.size() % 2 != 0) throw std::invalid_argument("complexify: odd-length vector");
  const Eigen::Index n = r.size() / 2;
  CVector c(n);
  for (Eigen::Index i = 0; i < n; ++i) c(i) = Complex(r(i), r(n + i));
  return c;
}

// ---------------------------------------------------------------------------
// Decompositions

Element adjoint(const Element& x) {
  std::vector<CMatrix> blocks;
  blocks.reserve(x.num_blocks());
  for (const auto& b : x.blocks()) blocks.push_back(b.adjoint());
  return Element(transposed(x.space()), std::move(blocks));
}

BlockSvd svd_block(const CMatrix& m, std::size_t block_index) {
  if (!m.allFinite()) throw NumericalError("svd: non-finite entries", block_index);
  Eigen::JacobiSVD<CMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (solver.info() != Eigen::Success) throw NumericalError("svd: decomposition failed", block_index);
  BlockSvd out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  if (!out.sigma.allFinite()) throw NumericalError("svd: non-finite singular values", block_index);
  return out;
}

std::vector<BlockSvd> svd(const Element& x) {
  std::vector<BlockSvd> out;
  out.reserve(x.num_blocks());
  for (std::size_t k = 0; k < x.num_blocks(); ++k) out.push_back(svd_block(x.block(k), k));
  return out;
}

int rank_of(const BlockSvd& s, const Tolerances& tol) {
  if (s.sigma.size() == 0) return 0;
  const double smax = s.sigma(0);
  if (smax <= tol.zero_tol) return 0;
  const double cut = tol.sv_threshold(smax);
  int r = 0;
  for (Eigen::Index i = 0; i < s.sigma.size(); ++i)
    if (s.sigma(i) > cut) ++r;
  return r;
}

std::vector<int> rank(const Element& x, const Tolerances& tol) {
  std::vector<int> out;
  for (const auto& s : svd(x)) out.push_back(rank_of(s, tol));
  return out;
}

int matrix_rank(const CMatrix& m, const Tolerances& tol) {
  if (m.size() == 0) return 0;
  return rank_of(svd_block(m), tol);
}

int matrix_rank(const RMatrix& m, const Tolerances& tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<RMatrix> solver(m);
  const RVector& sigma = solver.singularValues();
  if (sigma(0) <= tol.zero_tol) return 0;
  const double cut = tol.sv_threshold(sigma(0));
  int r = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > cut) ++r;
  return r;
}

Element mp_inverse(const Element& a, const Tolerances& tol) {
  std::vector<CMatrix> blocks;
  blocks.reserve(a.num_blocks());
  for (std::size_t k = 0; k < a.num_blocks(); ++k) {
    const auto s = svd_block(a.block(k), k);
    const int r = rank_of(s, tol);
    const auto& shape = a.space().block(k);
    CMatrix inv = CMatrix::Zero(shape.cols, shape.rows);
    for (int i = 0; i < r; ++i)
      inv += (1.0 / s.sigma(i)) * s.V.col(i) * s.U.col(i).adjoint();
    blocks.push_back(std::move(inv));
  }
  return Element(transposed(a.space()), std::move(blocks));
}

Element multiply(const Element& a, const Element& b) {
  if (a.num_blocks() != b.num_blocks()) throw SpaceMismatch("multiply: block counts differ");
  std::vector<BlockShape> shapes;
  std::vector<CMatrix> blocks;
  for (std::size_t k = 0; k < a.num_blocks(); ++k) {
    if (a.block(k).cols() != b.block(k).rows())
      throw SpaceMismatch("multiply: inner dimensions differ in block " + std::to_string(k));
    blocks.push_back(a.block(k) * b.block(k));
    shapes.push_back({static_cast<int>(a.block(k).rows()), static_cast<int>(b.block(k).cols())});
  }
  return Element(TripleSpace(std::move(shapes)), std::move(blocks));
}

double spectral_norm(const RMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<RMatrix> solver(m);
  return solver.singularValues()(0);
}

double spectral_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() == 1 || m.cols() == 1) return m.norm();
  Eigen::JacobiSVD<CMatrix> solver(m);
  return solver.singularValues()(0);
}

}  // namespace jbtk
