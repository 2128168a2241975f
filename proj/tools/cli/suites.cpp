// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "format.hpp"
#include "jbtk/gen.hpp"
#include "jbtk/json_io.hpp"
#include "jbtk/maps.hpp"
#include "jbtk/regular.hpp"
#include "jbtk/triple.hpp"

namespace jbtk::cli {

namespace {

std::uint64_t stream(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + tag * 0xD1B54A32D192ED03ULL + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct NamedSpace {
  std::string tag;
  TripleSpace space;
};

// Accumulates one assertion over many instances.
class Check {
 public:
  Check(std::string id, std::string anchor, double tolerance) {
    a_.id = std::move(id);
    a_.anchor = std::move(anchor);
    a_.tolerance = tolerance;
  }

  void residual(double r, const std::string& where) { outcome(r, r <= a_.tolerance, where); }

  void outcome(double r, bool ok, const std::string& where) {
    ++a_.instances;
    if (std::isnan(r)) ok = false;
    a_.residual = std::max(a_.residual, std::isnan(r) ? INFINITY : r);
    if (!ok && a_.passed) {
      a_.passed = false;
      a_.witness = where;
    }
  }

  void expect(bool ok, const std::string& where) { outcome(ok ? 0.0 : 1.0, ok, where); }
  void note(std::string n) { a_.note = std::move(n); }
  Assertion done() const { return a_; }

 private:
  Assertion a_;
};

std::string instance(int i) { return "instance " + std::to_string(i); }

double rel(double r, double scale) { return r / std::max(1.0, scale); }

// ---------------------------------------------------------------------------

// a and b with a* b = 0 and a b* = 0: disjoint singular subspaces of one
// Haar frame per block.
std::pair<Element, Element> orthogonal_pair(const TripleSpace& s, Rng& rng) {
  std::vector<CMatrix> a, b;
  for (const auto& shape : s.blocks()) {
    const int r = rng.uniform_int(1, std::min(shape.rows, shape.cols));
    const int r1 = rng.uniform_int(0, r);
    const CMatrix u = haar_unitary(shape.rows, rng), v = haar_unitary(shape.cols, rng);
    auto piece = [&](int start, int len) {
      RVector d(len);
      for (int i = 0; i < len; ++i) d(i) = rng.uniform(0.5, 2.0);
      return CMatrix(u.middleCols(start, len) * d.cast<Complex>().asDiagonal() * v.middleCols(start, len).adjoint());
    };
    a.push_back(piece(0, r1));
    b.push_back(piece(r1, r - r1));
  }
  return {Element(s, std::move(a)), Element(s, std::move(b))};
}

std::string expect_outcome(const Verdict& v, Outcome want) {
  std::string n = v.predicate + "=" + to_string(v.outcome);
  if (want != v.outcome) n += " (expected " + std::string(to_string(want)) + ")";
  if (!v.witness.empty()) {
    n += " witness ";
    for (std::size_t i = 0; i < v.witness.size(); ++i) n += (i ? ", " : "") + format_element(v.witness[i]);
  }
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// identities

std::vector<Assertion> identities_suite(const SuiteConfig& cfg) {
  std::vector<Assertion> out;
  const std::vector<NamedSpace> spaces = {{"m4", TripleSpace::matrices(4)}, {"m3+m2", TripleSpace{{3, 3}, {2, 2}}}};
  std::uint64_t tag = 100;
  for (const auto& [name, s] : spaces) {
    Rng rng(stream(cfg.seed, ++tag));
    const auto full = full_rank_profile(s);

    Check axiom("identities.jordan-triple-axiom." + name,
                "Jordan triple identity L(a,b)L(x,y) = L(x,y)L(a,b) + L(L(a,b)x,y) - L(x,L(b,a)y)", 1e-8);
    Check lnorm("identities.l-operator-norm." + name, "||L(a,a)|| = ||a||^2 (relative)", 1e-6);
    Check polar("identities.polarization." + name,
                "16{x,y,z} = sum over k=0..3, j=1,2 of i^k (-1)^j (x + i^k y + (-1)^j z)^[3]", 1e-8);
    Check hua("identities.hua." + name, "Hua identity (a^-1 - (a - b^-1)^-1)^-1 = a - U_a(b)", 1e-8);
    Check peirce("identities.bergmann-peirce0." + name, "B(e,e) = P0(e) for tripotents e", 1e-8);
    Check unitary("identities.bergmann-unitary." + name, "B(u,u) = 0 for unitaries u", 1e-8);

    for (int i = 0; i < cfg.trials; ++i) {
      const Element a = random_element(s, full, rng), b = random_element(s, full, rng);
      const Element x = random_element(s, full, rng), y = random_element(s, full, rng);

      const RealLinearOperator lab = l_operator(a, b), lxy = l_operator(x, y);
      const RealLinearOperator rhs =
          lxy * lab + l_operator(triple_product(a, b, x), y) - l_operator(x, triple_product(b, a, y));
      axiom.residual(rel(distance(lab * lxy, rhs), a.norm() * b.norm() * x.norm() * y.norm()), instance(i));

      const double na = a.norm();
      lnorm.residual(std::abs(l_operator(a, a).norm() - na * na) / (na * na), instance(i));

      Element sum = Element::zero(s);
      const Complex ik[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      for (const Complex k : ik)
        for (const double sign : {-1.0, 1.0}) sum += (k * sign) * cube(a + k * b + sign * x);
      const double scale = std::pow(a.norm() + b.norm() + x.norm(), 3);
      polar.residual(rel(distance(16.0 * triple_product(a, b, x), sum), scale), instance(i));

      const Element ha = random_conditioned_element(s, full, rng, 1.0, 2.0);
      const Element hb = random_conditioned_element(s, full, rng, 3.0, 4.0);
      const HuaOutcome h = hua_check(ha, hb, cfg.tol);
      hua.outcome(h.residual, h.applicable && h.residual <= 1e-8, instance(i) + (h.applicable ? "" : ": " + h.reason));

      const Element e = random_tripotent(s, random_rank_profile(s, rng), rng);
      const Tripotent te = Tripotent::validate(e, cfg.tol);
      peirce.residual(distance(bergmann(e, e), peirce_projections(te).p0), instance(i));

      const Element u = random_unitary(s, rng);
      unitary.residual(bergmann(u, u).norm(), instance(i));
    }
    for (auto* c : {&axiom, &lnorm, &polar, &hua, &peirce, &unitary}) out.push_back(c->done());

    Check unital("identities.unital-identities." + name,
                 "extreme-point preservers T = vS satisfy the first-order, second-order and partial identities "
                 "in v = T(1)",
                 1e-8);
    const int preservers = std::max(1, cfg.trials / 5);
    for (int i = 0; i < preservers; ++i) {
      const auto recipe = random_unital_recipe(s, rng);
      const std::vector<int> extra(recipe.targets.size(), i % 2);
      const auto g = random_extreme_times_jordan(s, recipe, extra, rng);
      const auto rep = check_unitary_identities(g.t, cfg.tol);
      const double r = std::max({rep.first_order, rep.second_order, rep.partial});
      unital.outcome(r, rep.outcome != Outcome::inapplicable && r <= 1e-8, instance(i) + " " + rep.detail);
    }
    out.push_back(unital.done());
  }
  return out;
}

// ---------------------------------------------------------------------------
// regularity

std::vector<Assertion> regularity_suite(const SuiteConfig& cfg) {
  std::vector<Assertion> out;
  const std::vector<NamedSpace> spaces = {{"m3", TripleSpace::matrices(3)},
                                         {"m2+m2", TripleSpace{{2, 2}, {2, 2}}},
                                         {"4x2", TripleSpace::rectangular(4, 2)},
                                         {"3x2+m2", TripleSpace{{3, 2}, {2, 2}}}};
  std::uint64_t tag = 200;
  for (const auto& [name, s] : spaces) {
    Rng rng(stream(cfg.seed, ++tag));
    Check extreme("regularity.extreme-agreement." + name,
                  "extreme point iff complete tripotent iff B(v,v) = 0 iff rank condition; zero disagreements", 0.0);
    Check bp("regularity.bp-agreement." + name,
             "BP quasi-invertible iff r(a) extreme iff B(a,a^) = 0 iff {a}^perp = 0; zero disagreements", 0.0);
    Check lres("regularity.range-tripotent-l." + name, "L(a,a^) = L(r(a),r(a))", 1e-9);
    Check qres("regularity.range-tripotent-q." + name, "Q(a)Q(a^) = P2(r(a))", 1e-9);
    int extreme_hits = 0, candidates = 0, bp_hits = 0;
    const int count = 5 * cfg.trials;
    for (int i = 0; i < count; ++i) {
      const Element a = random_element(s, random_rank_profile(s, rng), rng);
      const RangeTripotent rt = range_tripotent(a, cfg.tol);
      for (const Element* c : {&rt.tripotent.element(), &a}) {
        const ExtremeVerdict ev = extreme_characterizations(*c, cfg.tol);
        const bool agree = ev.rank_condition == ev.bergmann_zero && ev.bergmann_zero == ev.complete_tripotent;
        extreme.expect(agree, instance(i) + " " + ev.witness);
        extreme_hits += ev.extreme;
        ++candidates;
      }
      const BpVerdict bv = bp_characterizations(a, cfg.tol);
      bp.expect(bv.range_extreme == bv.bergmann_zero && bv.bergmann_zero == bv.trivial_annihilator, instance(i));
      bp_hits += bv.quasi_invertible;
      lres.residual(rt.l_residual, instance(i));
      qres.residual(rt.q_residual, instance(i));
    }
    extreme.note(std::to_string(extreme_hits) + " of " + std::to_string(candidates) + " candidates extreme");
    bp.note(std::to_string(bp_hits) + " of " + std::to_string(count) + " elements BP quasi-invertible");
    for (auto* c : {&extreme, &bp, &lres, &qres}) out.push_back(c->done());

    Check ortho("regularity.orthogonal-construction." + name, "a* b = 0 and a b* = 0 iff L(a,b) = 0", 0.0);
    Check additive("regularity.orthogonal-inverse." + name,
                   "(a + alpha b)^ = a^ + alpha^-1 b^ for orthogonal regular a, b and alpha in {1, -2, 1/2}", 1e-9);
    Check images("regularity.orthogonal-images." + name, "triple homomorphisms map orthogonal pairs to orthogonal pairs",
                 0.0);
    for (int i = 0; i < cfg.trials; ++i) {
      const auto [a, b] = orthogonal_pair(s, rng);
      ortho.expect(are_orthogonal(a, b, cfg.tol).orthogonal, instance(i));
      const Element ah = generalized_inverse(a, cfg.tol), bh = generalized_inverse(b, cfg.tol);
      for (const double alpha : {1.0, -2.0, 0.5})
        additive.residual(distance(generalized_inverse(a + alpha * b, cfg.tol), ah + (1.0 / alpha) * bh),
                          instance(i) + " alpha=" + format_number(alpha));
      const LinearMap t = random_triple_hom(s, random_triple_recipe(s, rng), rng);
      const auto ov = are_orthogonal(t(a), t(b), cfg.tol);
      images.outcome(ov.product_norm, ov.orthogonal, instance(i));
    }
    for (auto* c : {&ortho, &additive, &images}) out.push_back(c->done());
  }

  Check limit("regularity.cubic-root-limit", "x^[1/3^n] (n = 20) approaches the range tripotent r(x)", 1e-6);
  Rng rng(stream(cfg.seed, 299));
  for (int i = 0; i < std::max(1, cfg.trials / 2); ++i) {
    const TripleSpace& s = spaces[static_cast<std::size_t>(i) % spaces.size()].space;
    const Element a = random_element(s, random_rank_profile(s, rng), rng);
    limit.residual(distance(iterated_cubic_root(a, 20, cfg.tol), range_tripotent(a, cfg.tol).tripotent.element()), instance(i));
  }
  out.push_back(limit.done());
  return out;
}

// ---------------------------------------------------------------------------
// preservers

std::vector<Assertion> preservers_suite(const SuiteConfig& cfg) {
  std::vector<Assertion> out;
  const int family = std::max(1, cfg.trials / 2);
  SamplingOptions opts{.trials = std::max(5, cfg.trials / 5), .seed = cfg.seed, .tol = cfg.tol};

  Check alarms("preservers.implication-alarms",
               "no generated map violates a proven implication between the preserver classes", 0.0);

  // Triple homomorphisms.
  {
    const std::vector<TripleSpace> domains = {TripleSpace::matrices(2), TripleSpace{{2, 2}, {1, 1}},
                                              TripleSpace::rectangular(3, 2), TripleSpace{{2, 1}, {1, 1}}};
    Rng rng(stream(cfg.seed, 301));
    Check reg("preservers.triple-hom.strong-regularity", "triple homomorphisms strongly preserve regularity", 1e-9);
    Check sbp("preservers.triple-hom.strong-bp",
              "extreme-preserving triple homomorphisms strongly preserve BP quasi-invertibility", 1e-9);
    Check ext("preservers.triple-hom.extreme-preserver",
              "extreme-preserving triple homomorphisms map extreme points to extreme points", 1e-9);
    Check cubes("preservers.triple-hom.cubes", "T(x^[3]) = T(x)^[3] for strong BP preservers", 1e-9);
    for (int i = 0; i < family; ++i) {
      const TripleSpace& dom = domains[static_cast<std::size_t>(i) % domains.size()];
      const LinearMap t = random_triple_hom(dom, random_triple_recipe(dom, rng, true), rng);
      opts.seed = cfg.seed + static_cast<std::uint64_t>(i);
      const auto report = classify(t, opts);
      const Verdict* v = report.find("strong-regularity");
      reg.outcome(v->worst_residual, v->passed(), instance(i) + ": " + expect_outcome(*v, Outcome::pass));
      v = report.find("strong-bp");
      sbp.outcome(v->worst_residual, v->passed(), instance(i) + ": " + expect_outcome(*v, Outcome::pass));
      v = report.find("extreme-preserver");
      ext.outcome(v->worst_residual, v->passed(), instance(i) + ": " + expect_outcome(*v, Outcome::pass));
      alarms.expect(report.alarms.empty(), "triple hom " + instance(i) + ": " +
                                               (report.alarms.empty() ? "" : report.alarms.front()));
      for (int k = 0; k < 5; ++k) {
        const Element x = random_conditioned_element(dom, full_rank_profile(dom), rng);
        const Element tx3 = cube(t(x));
        cubes.residual(rel(distance(t(cube(x)), tx3), tx3.norm()), instance(i));
      }
    }
    for (auto* c : {&reg, &sbp, &ext, &cubes}) out.push_back(c->done());
  }

  // Products v S of an extreme point and a unital Jordan *-homomorphism.
  {
    const std::vector<TripleSpace> domains = {TripleSpace::matrices(2), TripleSpace{{2, 2}, {1, 1}},
                                              TripleSpace::matrices(3), TripleSpace::scalars(3)};
    Rng rng(stream(cfg.seed, 302));
    Check recon("preservers.vs.reconstruction", "T = T(1) S with S = T(1)^* T", 1e-9);
    Check recovered("preservers.vs.recovered-s", "T(1)^* T recovers the generating Jordan *-homomorphism", 1e-9);
    Check jordan("preservers.vs.jordan", "S = T(1)^* T is a Jordan *-homomorphism", 1e-9);
    Check range("preservers.vs.range",
                "T(A) lies in vv^* B v^*v and S(A) in v^*v B v^*v for v = T(1)", 1e-9);
    Check vext("preservers.vs.v-extreme", "T(1) is an extreme point", 0.0);
    Check ext("preservers.vs.extreme-preserver", "v S maps extreme points to extreme points", 1e-9);
    Check ident("preservers.vs.unital-identities", "v S satisfies the identities of extreme-point preservers", 1e-8);
    for (int i = 0; i < family; ++i) {
      const TripleSpace& dom = domains[static_cast<std::size_t>(i) % domains.size()];
      const auto recipe = random_unital_recipe(dom, rng);
      std::vector<int> extra;
      for (std::size_t k = 0; k < recipe.targets.size(); ++k) extra.push_back(rng.uniform_int(0, 1));
      const auto g = random_extreme_times_jordan(dom, recipe, extra, rng);
      opts.seed = cfg.seed + static_cast<std::uint64_t>(i);
      const auto report = classify(g.t, opts);
      const std::string where = instance(i);
      if (!report.factorization) {
        for (auto* c : {&recon, &recovered, &jordan, &range, &vext}) c->expect(false, where + ": " + report.factorization_error);
        continue;
      }
      const Factorization& f = *report.factorization;
      recon.residual(f.left_reconstruction, where);
      recovered.residual(distance(f.left, g.s), where);
      jordan.outcome(f.left_jordan.worst_residual, f.left_jordan.passed(), where);
      range.residual(std::max(f.t_range_residual, f.s_range_residual), where);
      vext.expect(f.v_extreme, where);
      const Verdict* v = report.find("extreme-preserver");
      ext.outcome(v->worst_residual, v->passed(), where + ": " + expect_outcome(*v, Outcome::pass));
      const auto& id = *report.identities;
      ident.outcome(std::max({id.first_order, id.second_order, id.partial}), id.outcome == Outcome::pass, where);
      alarms.expect(report.alarms.empty(), "v S " + where + ": " + (report.alarms.empty() ? "" : report.alarms.front()));
    }
    for (auto* c : {&recon, &recovered, &jordan, &range, &vext, &ext, &ident}) out.push_back(c->done());
  }

  // Perturbed triple homomorphisms must be caught by a strong-preservation check.
  {
    Rng rng(stream(cfg.seed, 303));
    Check caught("preservers.perturbed.detected",
                 "a map that is not a triple homomorphism fails strong regularity or strong BP preservation", 0.0);
    const TripleSpace dom = TripleSpace::matrices(2);
    for (int i = 0; i < std::max(2, cfg.trials / 10); ++i) {
      const LinearMap t = random_triple_hom(dom, random_triple_recipe(dom, rng, true), rng);
      CMatrix noise = gaussian_matrix(static_cast<int>(t.codomain().dim()), static_cast<int>(dom.dim()), rng);
      noise *= 0.1 / spectral_norm(noise);
      const LinearMap p(dom, t.codomain(), t.matrix() + noise);
      opts.seed = cfg.seed + static_cast<std::uint64_t>(i);
      const auto report = classify(p, opts);
      const bool hom = report.find("triple-hom")->passed();
      const bool strong = report.find("strong-regularity")->passed() && report.find("strong-bp")->passed();
      caught.expect(hom || !strong, instance(i));
      alarms.expect(report.alarms.empty(), "perturbed " + instance(i) + ": " +
                                               (report.alarms.empty() ? "" : report.alarms.front()));
    }
    out.push_back(caught.done());
  }
  out.push_back(alarms.done());
  return out;
}

// ---------------------------------------------------------------------------
// remarks

std::vector<Assertion> remarks_suite(const SuiteConfig& cfg) {
  std::vector<Assertion> out;
  const SamplingOptions opts{.trials = std::max(1, cfg.trials / 2), .seed = cfg.seed, .tol = cfg.tol};

  // Two isometries with orthogonal ranges in the 4x2 triple.
  {
    const auto ex = remark_two_isometries();
    const LinearMap& t = ex.map;
    const Element &v = ex.v, &w = ex.w;
    const Element x21 = Element::scalars({2.0, 1.0});

    Check unit("remarks.two-isometries.unit", "T(1,1) = v", 1e-12);
    unit.residual(distance(t(Element::scalars({1.0, 1.0})), v), "(1,1)");
    out.push_back(unit.done());

    Check norm("remarks.two-isometries.norm-T(1,0)", "||T(1,0)|| = 1/sqrt(2), so T(1,0) is not a tripotent", 1e-12);
    norm.residual(std::abs(t(Element::scalars({1.0, 0.0})).norm() - 1.0 / std::sqrt(2.0)), "(1,0)");
    out.push_back(norm.done());

    Check gi_image("remarks.two-isometries.gi-of-T(2,1)", "T(2,1)^ = (3/5) v + (1/5) w", 1e-12);
    gi_image.residual(distance(generalized_inverse(t(x21), cfg.tol), 0.6 * v + 0.2 * w), "(2,1)");
    out.push_back(gi_image.done());

    Check image_gi("remarks.two-isometries.T-of-gi(2,1)", "(2,1)^ = (1/2,1) and T(1/2,1) = (3/4) v - (1/4) w", 1e-12);
    const Element x21_hat = generalized_inverse(x21, cfg.tol);
    image_gi.residual(distance(x21_hat, Element::scalars({0.5, 1.0})), "(2,1)^");
    image_gi.residual(distance(t(x21_hat), 0.75 * v - 0.25 * w), "T((2,1)^)");
    out.push_back(image_gi.done());

    Check pairs("remarks.two-isometries.bergmann-pairs", "T(a^)^* T(a) = 1 for a = (lambda, mu), lambda mu != 0",
                1e-12);
    Rng rng(stream(cfg.seed, 401));
    const Element one = Element::identity(TripleSpace::matrices(2));
    for (int i = 0; i < 20; ++i) {
      const Complex lambda = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
      const Complex mu = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
      const Element a = Element::scalars({lambda, mu});
      pairs.residual(distance(multiply(adjoint(t(generalized_inverse(a, cfg.tol))), t(a)), one),
                     format_element(a));
    }
    out.push_back(pairs.done());

    const LinearMap s = left_multiply(adjoint(v), t);
    Check sform("remarks.two-isometries.S-formula", "S(lambda, mu) = v^* T(lambda, mu) = (lambda + mu)/2 1", 1e-12);
    for (const auto& x : {Element::scalars({1.0, 0.0}), Element::scalars({0.0, 1.0})})
      sform.residual(distance(s(x), 0.5 * one), format_element(x));
    out.push_back(sform.done());

    const auto expect_verdict = [&](const std::string& id, const std::string& anchor, const Verdict& verdict,
                                    Outcome want, const std::vector<Element>& witness) {
      Check c("remarks.two-isometries." + id, anchor, 0.0);
      bool ok = verdict.outcome == want;
      if (!witness.empty())
        ok = ok && verdict.witness.size() == witness.size() &&
             std::equal(witness.begin(), witness.end(), verdict.witness.begin(),
                        [](const Element& a, const Element& b) { return distance(a, b) <= 1e-12; });
      c.expect(ok, expect_outcome(verdict, want));
      c.note(expect_outcome(verdict, want));
      out.push_back(c.done());
    };
    expect_verdict("extreme-preserver", "T maps extreme points to extreme points", preserves_extreme_points(t, opts),
                   Outcome::pass, {});
    expect_verdict("bergmann-zero", "T preserves Bergmann-zero pairs", preserves_bergmann_zero(t, opts), Outcome::pass,
                   {});
    expect_verdict("strong-bp", "T does not strongly preserve BP quasi-invertibility: T((2,1)^) != T(2,1)^",
                   strongly_preserves_bp(t, opts), Outcome::fail, {x21});
    expect_verdict("triple-hom", "T is not a triple homomorphism: (1,0) is a tripotent, T(1,0) is not",
                   is_triple_hom(t, cfg.tol), Outcome::fail, {Element::scalars({1.0, 0.0})});
    expect_verdict("jordan-S", "S = v^* T is not a Jordan homomorphism: S(1,-1)^2 = 0 but S((1,-1)^2) = 1",
                   is_jordan_star_hom(s, opts), Outcome::fail, {Element::scalars({1.0, -1.0})});

    Check ident("remarks.two-isometries.unital-identities", "T satisfies the identities of extreme-point preservers",
                1e-12);
    const auto rep = check_unitary_identities(t, cfg.tol);
    ident.outcome(std::max({rep.first_order, rep.second_order, rep.partial}), rep.outcome == Outcome::pass,
                  rep.detail);
    out.push_back(ident.done());
  }

  // A single non-unitary isometry in the 3x2 triple.
  {
    const auto ex = remark_nonunitary();
    Check ext("remarks.nonunitary.extreme-preserver", "lambda -> lambda v maps extreme points to extreme points", 0.0);
    const Verdict ve = preserves_extreme_points(ex.map, opts);
    ext.expect(ve.passed(), expect_outcome(ve, Outcome::pass));
    out.push_back(ext.done());

    Check fac("remarks.nonunitary.factorization",
              "v = T(1) is extreme with v^*v = 1 and vv^* != 1: the isometry side of the prime alternative", 0.0);
    const Factorization f = factorize(ex.map, opts);
    fac.expect(f.v_extreme, "v not extreme");
    fac.expect(f.v_isometry, "v^*v != 1");
    fac.expect(!f.v_coisometry, "vv^* = 1");
    fac.expect(!f.v_unitary, "v unitary");
    fac.expect(f.prime == PrimeAlternative::isometry, std::string("prime alternative ") + to_string(f.prime));
    out.push_back(fac.done());

    Check sv("remarks.nonunitary.T(i)", "T(i) has singular values (1,1)", 1e-12);
    const auto d = svd(ex.map(Element::scalars({Complex(0.0, 1.0)})));
    for (Eigen::Index k = 0; k < d.front().sigma.size(); ++k) sv.residual(std::abs(d.front().sigma(k) - 1.0), "T(i)");
    out.push_back(sv.done());
  }
  return out;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "regularity", "preservers", "remarks", "all"};
  return names;
}

std::vector<Assertion> run_suite(const std::string& name, const SuiteConfig& cfg) {
  std::vector<Assertion> out;
  auto append = [&](std::vector<Assertion> more) { out.insert(out.end(), more.begin(), more.end()); };
  const bool all = name == "all";
  bool known = all;
  if (all || name == "identities") append(identities_suite(cfg)), known = true;
  if (all || name == "regularity") append(regularity_suite(cfg)), known = true;
  if (all || name == "preservers") append(preservers_suite(cfg)), known = true;
  if (all || name == "remarks") append(remarks_suite(cfg)), known = true;
  if (!known) throw std::invalid_argument("unknown suite \"" + name + "\"");
  std::sort(out.begin(), out.end(), [](const Assertion& a, const Assertion& b) { return a.id < b.id; });
  return out;
}

nlohmann::json to_json(const Assertion& a) {
  nlohmann::json j = {{"id", a.id},           {"anchor", a.anchor},   {"residual", a.residual},
                      {"tolerance", a.tolerance}, {"instances", a.instances}, {"passed", a.passed}};
  if (!a.witness.empty()) j["witness"] = a.witness;
  if (!a.note.empty()) j["note"] = a.note;
  return j;
}

}  // namespace jbtk::cli
