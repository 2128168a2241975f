// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "demo.hpp"

#include <stdexcept>

#include "format.hpp"
#include "jbtk/gen.hpp"
#include "jbtk/regular.hpp"
#include "jbtk/triple.hpp"

namespace jbtk::cli {

namespace {

std::string verdict_line(const std::string& label, const Verdict& v) {
  std::string line = label + ": " + (v.passed() ? "PASS" : v.failed() ? "FAIL" : "N/A");
  if (v.failed() && v.witness.size() == 1) line += " (witness x=" + format_element(v.witness.front()) + ")";
  return line;
}

// x = a v + b w with v, w isometries of orthogonal ranges: a = tr(v^* x)/2.
std::string in_vw(const Element& x, const Element& v, const Element& w) {
  const Complex a = multiply(adjoint(v), x).block(0).trace() / 2.0;
  const Complex b = multiply(adjoint(w), x).block(0).trace() / 2.0;
  std::string out = format_complex(a) + " v";
  const std::string bs = format_complex(b);
  out += bs[0] == '-' ? " - " + bs.substr(1) : " + " + bs;
  return out + " w";
}

std::string yes(bool b) { return b ? "yes" : "no"; }

void two_isometries(const SamplingOptions& opts, std::ostream& out) {
  const auto ex = remark_two_isometries();
  const LinearMap& t = ex.map;
  const Element &v = ex.v, &w = ex.w;
  const Element one = Element::identity(TripleSpace::matrices(2));

  out << "Two isometries with orthogonal ranges\n"
      << "  domain   " << format_space(t.domain()) << "\n"
      << "  codomain " << format_space(t.codomain()) << "\n"
      << "  v = " << format_element(v) << "\n"
      << "  w = " << format_element(w) << "\n"
      << "  v*v = w*w = 1: " << yes(distance(multiply(adjoint(v), v), one) < 1e-12 &&
                                    distance(multiply(adjoint(w), w), one) < 1e-12)
      << ", v*w = 0: " << yes(multiply(adjoint(v), w).norm() < 1e-12) << "\n"
      << "  T(lambda,mu) = lambda/2 (v + w) + mu/2 (v - w)\n\n";

  const Element x10 = Element::scalars({1.0, 0.0});
  const Element x21 = Element::scalars({2.0, 1.0});
  const Element x21_hat = generalized_inverse(x21, opts.tol);
  out << "  T(1,1)      = " << in_vw(t(Element::scalars({1.0, 1.0})), v, w) << "\n"
      << "  ||T(1,0)||  = " << format_number(t(x10).norm()) << ", so T(1,0) is not a tripotent although (1,0) is\n"
      << "  T(2,1)^     = " << in_vw(generalized_inverse(t(x21), opts.tol), v, w) << "\n"
      << "  (2,1)^      = " << format_element(x21_hat) << "\n"
      << "  T((2,1)^)   = " << in_vw(t(x21_hat), v, w) << "\n"
      << "  T((2,1)^) != T(2,1)^ : separation "
      << format_residual(distance(t(x21_hat), generalized_inverse(t(x21), opts.tol))) << "\n";

  const LinearMap s = left_multiply(adjoint(v), t);
  const Element xm = Element::scalars({1.0, -1.0});
  out << "  S = v* T,  S(1,0) = " << format_element(s(x10)) << ", S(0,1) = "
      << format_element(s(Element::scalars({0.0, 1.0}))) << "\n"
      << "  S(1,-1)^2   = " << format_element(multiply(s(xm), s(xm))) << "\n"
      << "  S((1,-1)^2) = " << format_element(s(multiply(xm, xm))) << "\n\n";

  out << "Verdicts (seed " << opts.seed << ", " << opts.trials << " random trials per sampled check)\n"
      << verdict_line("preserves-extreme-points", preserves_extreme_points(t, opts)) << "\n"
      << verdict_line("preserves-Bergmann-zero", preserves_bergmann_zero(t, opts)) << "\n"
      << verdict_line("preserves-BP", preserves_bp(t, opts)) << "\n"
      << verdict_line("strongly-preserves-BP", strongly_preserves_bp(t, opts)) << "\n"
      << verdict_line("triple-homomorphism", is_triple_hom(t, opts.tol)) << "\n"
      << verdict_line("S-Jordan-*-homomorphism", is_jordan_star_hom(s, opts)) << "\n";
  const auto rep = check_unitary_identities(t, opts.tol);
  out << "unital identities: " << (rep.outcome == Outcome::pass ? "PASS" : "FAIL") << " (first "
      << format_residual(rep.first_order) << ", second " << format_residual(rep.second_order) << ", partial "
      << format_residual(rep.partial) << ")\n";
}

void nonunitary(const SamplingOptions& opts, std::ostream& out) {
  const auto ex = remark_nonunitary();
  const Element& v = ex.v;
  const Element vsv = multiply(adjoint(v), v), vvs = multiply(v, adjoint(v));
  const auto i2 = Element::identity(TripleSpace::matrices(2));
  const auto i3 = Element::identity(TripleSpace::matrices(3));

  out << "A non-unitary extreme point\n"
      << "  domain   " << format_space(ex.map.domain()) << "\n"
      << "  codomain " << format_space(ex.map.codomain()) << "\n"
      << "  T(lambda) = lambda v,  v = " << format_element(v) << "\n\n"
      << "  v*v = " << format_element(vsv) << (distance(vsv, i2) < 1e-12 ? " = I2" : " != I2") << "\n"
      << "  vv* = " << format_element(vvs) << (distance(vvs, i3) < 1e-12 ? " = I3" : " != I3") << "\n";

  const auto sv = svd(ex.map(Element::scalars({Complex(0.0, 1.0)}))).front().sigma;
  out << "  singular values of T(i): (";
  for (Eigen::Index k = 0; k < sv.size(); ++k) out << (k ? "," : "") << format_number(sv(k));
  out << ")\n\n";

  const Factorization f = factorize(ex.map, opts);
  out << "Verdicts (seed " << opts.seed << ", " << opts.trials << " random trials per sampled check)\n"
      << verdict_line("preserves-extreme-points", preserves_extreme_points(ex.map, opts)) << "\n"
      << "T(1) extreme: " << yes(f.v_extreme) << ", unitary: " << yes(f.v_unitary)
      << ", isometry: " << yes(f.v_isometry) << ", coisometry: " << yes(f.v_coisometry) << "\n"
      << "prime alternative: " << to_string(f.prime) << "\n"
      << "no factorization T = u S with u unitary exists: the codomain has no unitaries\n";
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {"remark-5-8", "remark-5-9"};
  return names;
}

void run_demo(const std::string& name, const SamplingOptions& opts, std::ostream& out) {
  if (name == "remark-5-8")
    nonunitary(opts, out);
  else if (name == "remark-5-9")
    two_isometries(opts, out);
  else
    throw std::invalid_argument("unknown demo \"" + name + "\"");
}

}  // namespace jbtk::cli
