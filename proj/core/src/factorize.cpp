// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <sstream>

#include "jbtk/errors.hpp"
#include "jbtk/maps.hpp"
#include "jbtk/regular.hpp"
#include "jbtk/triple.hpp"

namespace jbtk {

const char* to_string(PrimeAlternative p) {
  switch (p) {
    case PrimeAlternative::not_prime: return "not-prime";
    case PrimeAlternative::isometry: return "isometry";
    case PrimeAlternative::coisometry: return "coisometry";
    case PrimeAlternative::unitary: return "unitary";
    case PrimeAlternative::neither: return "neither";
  }
  return "?";
}

namespace {

// Per block: ||x - I|| <= tol for square blocks x.
bool is_identity(const Element& x, double tol) {
  for (const auto& b : x.blocks())
    if (b.rows() != b.cols() || spectral_norm(CMatrix(b - CMatrix::Identity(b.rows(), b.cols()))) > tol) return false;
  return true;
}

}  // namespace

Factorization factorize(const LinearMap& t, const SamplingOptions& opts) {
  const TripleSpace& dom = t.domain();
  if (!dom.is_unital_cstar()) throw FactorizationRefused("factorize: domain has no unit");
  const Element v = t(Element::identity(dom));
  std::optional<Tripotent> tri;
  try {
    tri = Tripotent::validate(v, opts.tol);
  } catch (const NotTripotent&) {
    std::ostringstream os;
    os << "factorize: T(1) is not a tripotent (||v v* v - v|| = " << distance(cube(v), v) << ")";
    throw FactorizationRefused(os.str());
  }

  const Element vs = adjoint(v);
  const Element vsv = multiply(vs, v);
  const Element vvs = multiply(v, vs);
  const double tol = opts.tol.zero_tol;

  Factorization f{v,
                  left_multiply(vs, t),
                  right_multiply(t, vs),
                  is_extreme_point(v, opts.tol).extreme,
                  tri->is_unitary(),
                  false,
                  is_identity(vsv, tol),
                  is_identity(vvs, tol),
                  {},
                  {},
                  0.0,
                  0.0,
                  0.0,
                  0.0,
                  PrimeAlternative::not_prime};
  if (f.v_unitary) f.v_self_adjoint_unitary = distance(v, vs) <= tol;

  SamplingOptions sweep = opts;
  f.left_jordan = is_jordan_star_hom(f.left, sweep);
  f.right_jordan = is_jordan_star_hom(f.right, sweep);
  f.left_reconstruction = distance(t, left_multiply(v, f.left));
  f.right_reconstruction = distance(t, right_multiply(f.right, v));

  for (std::size_t k = 0; k < dom.dim(); ++k) {
    const Element tx = t(basis_element(dom, k));
    f.t_range_residual = std::max(f.t_range_residual, distance(tx, multiply(multiply(vvs, tx), vsv)));
    const Element sx = f.left(basis_element(dom, k));
    f.s_range_residual = std::max(f.s_range_residual, distance(sx, multiply(multiply(vsv, sx), vsv)));
  }

  if (t.codomain().num_blocks() == 1) {
    if (f.v_isometry && f.v_coisometry)
      f.prime = PrimeAlternative::unitary;
    else if (f.v_isometry)
      f.prime = PrimeAlternative::isometry;
    else if (f.v_coisometry)
      f.prime = PrimeAlternative::coisometry;
    else
      f.prime = PrimeAlternative::neither;
  }
  return f;
}

}  // namespace jbtk
