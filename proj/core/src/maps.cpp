// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "jbtk/maps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jbtk/gen.hpp"
#include "jbtk/regular.hpp"
#include "jbtk/triple.hpp"

namespace jbtk {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inapplicable: return "inapplicable";
  }
  return "?";
}

const char* to_string(CheckKind k) { return k == CheckKind::decisive ? "decisive" : "sampled"; }

namespace {

// Independent streams per sample family, derived from the user seed.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kExtremeStream = 1;
constexpr std::uint64_t kBpStream = 2;
constexpr std::uint64_t kRegularStream = 3;
constexpr std::uint64_t kJordanStream = 4;

constexpr double kTieMargin = 1e-9;

// Worst residual with first-index tie breaking; used by decisive sweeps.
struct WorstTracker {
  double worst = 0.0;
  std::vector<Element> witness;

  void offer(double residual, const std::vector<Element>& candidate) {
    if (witness.empty() || residual > worst * (1.0 + kTieMargin) + 1e-300) {
      worst = residual;
      witness = candidate;
    }
  }
};

// Max residual, first failing trial as witness; used by sampled checks.
struct SampleTracker {
  double worst = 0.0;
  std::vector<Element> witness;
  std::string detail;

  void record(double residual, bool ok, const Element& x, const std::string& why) {
    worst = std::max(worst, residual);
    if (!ok && witness.empty()) {
      witness = {x};
      detail = why;
    }
  }
};

Verdict make_verdict(std::string id, CheckKind kind, const SamplingOptions& opts) {
  Verdict v;
  v.predicate = std::move(id);
  v.kind = kind;
  v.seed = opts.seed;
  return v;
}

Verdict inapplicable(std::string id, CheckKind kind, const SamplingOptions& opts, std::string why) {
  Verdict v = make_verdict(std::move(id), kind, opts);
  v.outcome = Outcome::inapplicable;
  v.detail = std::move(why);
  return v;
}

Element square(const Element& a) { return multiply(a, a); }

// u + E_ii for every diagonal position of the canonical complete tripotent u.
std::vector<Element> bp_probes(const TripleSpace& domain) {
  const Element u = Element::canonical_isometry(domain);
  std::vector<Element> probes{u};
  for (std::size_t k = 0; k < domain.num_blocks(); ++k) {
    const auto& b = domain.block(k);
    for (int i = 0; i < std::min(b.rows, b.cols); ++i) probes.push_back(u + Element::matrix_unit(domain, k, i, i));
  }
  return probes;
}

std::vector<Element> regular_probes(const TripleSpace& domain) {
  auto probes = bp_probes(domain);
  for (std::size_t k = 0; k < domain.num_blocks(); ++k) probes.push_back(Element::matrix_unit(domain, k, 0, 0));
  return probes;
}

struct Samples {
  std::vector<Element> items;
  int probes = 0;
};

Samples extreme_samples(const TripleSpace& domain, const SamplingOptions& opts) {
  Samples s;
  s.items.push_back(Element::canonical_isometry(domain));
  s.probes = 1;
  Rng rng(stream_seed(opts.seed, kExtremeStream));
  for (int i = 0; i < opts.trials; ++i) s.items.push_back(random_extreme(domain, rng));
  return s;
}

Samples bp_samples(const TripleSpace& domain, const SamplingOptions& opts) {
  Samples s;
  s.items = bp_probes(domain);
  s.probes = static_cast<int>(s.items.size());
  Rng rng(stream_seed(opts.seed, kBpStream));
  const auto full = full_rank_profile(domain);
  for (int i = 0; i < opts.trials; ++i) s.items.push_back(random_conditioned_element(domain, full, rng));
  return s;
}

Samples regular_samples(const TripleSpace& domain, const SamplingOptions& opts) {
  Samples s;
  s.items = regular_probes(domain);
  s.probes = static_cast<int>(s.items.size());
  Rng rng(stream_seed(opts.seed, kRegularStream));
  for (int i = 0; i < opts.trials; ++i) {
    const auto ranks = random_rank_profile(domain, rng);
    s.items.push_back(random_conditioned_element(domain, ranks, rng));
  }
  return s;
}

void finish_sampled(Verdict& v, const SampleTracker& tr, const Samples& s, int trials) {
  v.worst_residual = tr.worst;
  v.outcome = tr.witness.empty() ? Outcome::pass : Outcome::fail;
  v.witness = tr.witness;
  v.detail = tr.detail;
  v.probes = s.probes;
  v.trials = trials;
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Decisive checks

Verdict is_jordan_star_hom(const LinearMap& t, const SamplingOptions& opts) {
  const char* id = "jordan-star-hom";
  if (!t.domain().is_unital_cstar() || !t.codomain().is_unital_cstar())
    return inapplicable(id, CheckKind::decisive, opts, "domain and codomain must be square-block");

  const TripleSpace& dom = t.domain();
  const std::size_t d = dom.dim();
  std::vector<Element> basis;
  for (std::size_t k = 0; k < d; ++k) basis.push_back(basis_element(dom, k));

  // Squares on {e_k, e_k + e_l, e_k - e_l, e_k + i e_l} determine the
  // symmetric bilinear form T(ab + ba) - T(a)T(b) - T(b)T(a) completely.
  WorstTracker worst;
  auto check_square = [&](const Element& a) {
    const double r = distance(t(square(a)), square(t(a)));
    worst.offer(r, {a});
  };
  for (std::size_t k = 0; k < d; ++k) check_square(basis[k]);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = k + 1; l < d; ++l) {
      check_square(basis[k] + basis[l]);
      check_square(basis[k] - basis[l]);
      check_square(basis[k] + Complex(0.0, 1.0) * basis[l]);
    }
  for (std::size_t k = 0; k < d; ++k) {
    const Element& e = basis[k];
    const double r = distance(t(adjoint(e)), adjoint(t(e)));
    worst.offer(r, {e});
  }

  Verdict v = make_verdict(id, CheckKind::decisive, opts);
  v.probes = static_cast<int>(d + 3 * d * (d - 1) / 2 + d);
  Rng rng(stream_seed(opts.seed, kJordanStream));
  for (int i = 0; i < opts.trials; ++i) {
    const Element a = random_element(dom, full_rank_profile(dom), rng);
    const double scale = std::max(1.0, a.norm() * a.norm());
    worst.offer(distance(t(square(a)), square(t(a))) / scale, {a});
    worst.offer(distance(t(adjoint(a)), adjoint(t(a))) / std::max(1.0, a.norm()), {a});
  }
  v.trials = opts.trials;
  v.worst_residual = worst.worst;
  v.outcome = worst.worst <= opts.tol.zero_tol ? Outcome::pass : Outcome::fail;
  if (v.failed()) {
    v.witness = worst.witness;
    v.detail = "T(a^2) != T(a)^2 or T(a*) != T(a)* at the witness (residual " + num(worst.worst) + ")";
  }
  return v;
}

Verdict is_triple_hom(const LinearMap& t, const Tolerances& tol) {
  SamplingOptions opts;
  opts.tol = tol;
  opts.trials = 0;
  Verdict v = make_verdict("triple-hom", CheckKind::decisive, opts);

  const TripleSpace& dom = t.domain();
  const std::size_t d = dom.dim();
  std::vector<Element> basis, images;
  for (std::size_t k = 0; k < d; ++k) {
    basis.push_back(basis_element(dom, k));
    images.push_back(t(basis.back()));
  }
  const Complex i_unit(0.0, 1.0);

  WorstTracker worst;
  int checked = 0;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t c = a; c < d; ++c)
      for (std::size_t m = 0; m < 2 * d; ++m) {
        const std::size_t j = m % d;
        const bool imaginary = m >= d;
        const Element y = imaginary ? i_unit * basis[j] : basis[j];
        const Element ty = imaginary ? i_unit * images[j] : images[j];
        const double r = distance(t(triple_product(basis[a], y, basis[c])), triple_product(images[a], ty, images[c]));
        ++checked;
        if (a == j && j == c && !imaginary)
          worst.offer(r, {basis[a]});
        else
          worst.offer(r, {basis[a], y, basis[c]});
      }

  v.probes = checked;
  v.worst_residual = worst.worst;
  v.outcome = worst.worst <= tol.zero_tol ? Outcome::pass : Outcome::fail;
  if (v.failed()) {
    v.witness = worst.witness;
    const Element& x = v.witness.front();
    if (v.witness.size() == 1 && distance(cube(x), x) <= tol.zero_tol) {
      const Element tx = t(x);
      v.detail = "witness is a tripotent but its image is not (||T(x)|| = " + num(tx.norm()) +
                 ", ||{Tx,Tx,Tx} - Tx|| = " + num(distance(cube(tx), tx)) + ")";
    } else {
      v.detail = "T{x,y,z} != {Tx,Ty,Tz} (residual " + num(worst.worst) + ")";
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Sampled checks

Verdict preserves_extreme_points(const LinearMap& t, const SamplingOptions& opts) {
  Verdict v = make_verdict("extreme-preserver", CheckKind::sampled, opts);
  const Samples s = extreme_samples(t.domain(), opts);
  SampleTracker tr;
  for (const auto& e : s.items) {
    const auto ev = is_extreme_point(t(e), opts.tol);
    tr.record(ev.bergmann_norm, ev.extreme, e, "image of an extreme point is not extreme: " + ev.witness);
  }
  finish_sampled(v, tr, s, opts.trials);
  return v;
}

Verdict preserves_bp(const LinearMap& t, const SamplingOptions& opts) {
  Verdict v = make_verdict("bp-preserver", CheckKind::sampled, opts);
  const Samples s = bp_samples(t.domain(), opts);
  SampleTracker tr;
  for (const auto& x : s.items) {
    const auto bv = is_bp_quasi_invertible(t(x), opts.tol);
    tr.record(bv.bergmann_norm, bv.quasi_invertible, x, "T(x) is not BP quasi-invertible");
  }
  finish_sampled(v, tr, s, opts.trials);
  return v;
}

Verdict strongly_preserves_bp(const LinearMap& t, const SamplingOptions& opts) {
  Verdict v = make_verdict("strong-bp", CheckKind::sampled, opts);
  const Samples s = bp_samples(t.domain(), opts);
  SampleTracker tr;
  for (const auto& x : s.items) {
    const Element tx = t(x);
    const auto bv = is_bp_quasi_invertible(tx, opts.tol);
    if (!bv.quasi_invertible) {
      tr.record(0.0, false, x, "T(x) is not BP quasi-invertible");
      continue;
    }
    const Element& tx_hat = *bv.quasi_inverse;
    const double r = distance(t(generalized_inverse(x, opts.tol)), tx_hat) / std::max(1.0, tx_hat.norm());
    tr.record(r, r <= opts.tol.zero_tol, x, "T(x^) != T(x)^ (relative residual " + num(r) + ")");
  }
  finish_sampled(v, tr, s, opts.trials);
  return v;
}

Verdict strongly_preserves_regularity(const LinearMap& t, const SamplingOptions& opts) {
  Verdict v = make_verdict("strong-regularity", CheckKind::sampled, opts);
  const Samples s = regular_samples(t.domain(), opts);
  SampleTracker tr;
  for (const auto& x : s.items) {
    const Element tx_hat = generalized_inverse(t(x), opts.tol);
    const double r = distance(t(generalized_inverse(x, opts.tol)), tx_hat) / std::max(1.0, tx_hat.norm());
    tr.record(r, r <= opts.tol.zero_tol, x, "T(x^) != T(x)^ (relative residual " + num(r) + ")");
  }
  finish_sampled(v, tr, s, opts.trials);
  return v;
}

Verdict preserves_bergmann_zero(const LinearMap& t, const SamplingOptions& opts) {
  Verdict v = make_verdict("bergmann-zero", CheckKind::sampled, opts);
  const Samples bp = bp_samples(t.domain(), opts);
  const Samples ex = extreme_samples(t.domain(), opts);
  SampleTracker tr;
  auto check = [&](const Element& x, const Element& y) {
    const Element tx = t(x), ty = t(y);
    const double r = bergmann(tx, ty).norm();
    tr.record(r, r <= opts.tol.zero_tol * std::max(1.0, tx.norm() * ty.norm()), x, "B(Tx, Ty) != 0");
  };
  for (const auto& x : bp.items) check(x, generalized_inverse(x, opts.tol));
  for (const auto& e : ex.items) check(e, e);
  Samples all;
  all.probes = bp.probes + ex.probes;
  finish_sampled(v, tr, all, 2 * opts.trials);
  return v;
}

// ---------------------------------------------------------------------------
// Unital identities

UnitaryIdentityReport check_unitary_identities(const LinearMap& t, const Tolerances& tol) {
  UnitaryIdentityReport out;
  const TripleSpace& dom = t.domain();
  if (!dom.is_unital_cstar()) {
    out.detail = "domain is not unital";
    return out;
  }
  const Element v = t(Element::identity(dom));
  if (distance(cube(v), v) > tol.zero_tol * std::max(1.0, v.norm())) {
    out.detail = "T(1) is not a partial isometry";
    return out;
  }

  // Real basis of the self-adjoint part: E_ii, E_ij + E_ji, i(E_ij - E_ji).
  std::vector<Element> herm;
  for (std::size_t k = 0; k < dom.num_blocks(); ++k) {
    const int n = dom.block(k).rows;
    for (int i = 0; i < n; ++i) {
      herm.push_back(Element::matrix_unit(dom, k, i, i));
      for (int j = i + 1; j < n; ++j) {
        const Element eij = Element::matrix_unit(dom, k, i, j);
        const Element eji = Element::matrix_unit(dom, k, j, i);
        herm.push_back(eij + eji);
        herm.push_back(Complex(0.0, 1.0) * (eij - eji));
      }
    }
  }

  const Element vs = adjoint(v);
  const Element vsv = multiply(vs, v);
  const Element vvs = multiply(v, vs);
  auto mul3 = [](const Element& a, const Element& b, const Element& c) { return multiply(multiply(a, b), c); };

  auto first = [&](const Element& a) {
    const Element ta = t(a);
    return distance(ta, multiply(ta, vsv) + multiply(vvs, ta) - mul3(v, adjoint(ta), v));
  };
  auto second = [&](const Element& a) {
    const Element ta = t(a);
    const Element ta2 = t(multiply(a, a));
    const Element rhs = multiply(ta2, vsv) + multiply(vvs, ta2) - 2.0 * mul3(ta, adjoint(ta), v) -
                        2.0 * mul3(v, adjoint(ta), ta) + 2.0 * mul3(ta, vs, ta) + mul3(v, adjoint(ta2), v);
    return distance(ta2, rhs);
  };
  auto partial = [&](const Element& a) {
    const Element ta = t(a);
    return distance(mul3(vs, ta, vs), mul3(vsv, adjoint(ta), vvs));
  };

  double scale = 1.0;
  for (const auto& h : herm) {
    out.first_order = std::max(out.first_order, first(h));
    out.partial = std::max(out.partial, partial(h));
    scale = std::max(scale, t(h).norm());
  }
  // The second-order identity is quadratic in a: check h_i and h_i + h_j.
  for (std::size_t i = 0; i < herm.size(); ++i) {
    out.second_order = std::max(out.second_order, second(herm[i]));
    for (std::size_t j = i + 1; j < herm.size(); ++j)
      out.second_order = std::max(out.second_order, second(herm[i] + herm[j]) / 4.0);
  }
  const double threshold = tol.zero_tol * scale * scale;
  const bool ok = out.first_order <= threshold && out.second_order <= threshold && out.partial <= threshold;
  out.outcome = ok ? Outcome::pass : Outcome::fail;
  if (!ok) out.detail = "identity residuals exceed tolerance";
  return out;
}

// ---------------------------------------------------------------------------
// Classification

const Verdict* ClassificationReport::find(const std::string& predicate) const {
  for (const auto& v : verdicts)
    if (v.predicate == predicate) return &v;
  return nullptr;
}

ClassificationReport classify(const LinearMap& t, const SamplingOptions& opts) {
  ClassificationReport report;
  report.options = opts;
  report.verdicts.push_back(is_triple_hom(t, opts.tol));
  report.verdicts.push_back(is_jordan_star_hom(t, opts));
  report.verdicts.push_back(preserves_extreme_points(t, opts));
  report.verdicts.push_back(preserves_bp(t, opts));
  report.verdicts.push_back(strongly_preserves_bp(t, opts));
  report.verdicts.push_back(strongly_preserves_regularity(t, opts));
  report.verdicts.push_back(preserves_bergmann_zero(t, opts));
  std::sort(report.verdicts.begin(), report.verdicts.end(),
            [](const Verdict& a, const Verdict& b) { return a.predicate < b.predicate; });

  if (t.domain().is_unital_cstar()) {
    report.identities = check_unitary_identities(t, opts.tol);
    try {
      report.factorization = factorize(t, opts);
    } catch (const FactorizationRefused& e) {
      report.factorization_error = e.what();
    }
  }

  auto outcome = [&](const char* id) { return report.find(id)->outcome; };
  auto implies = [&](const char* premise, const char* conclusion, const std::string& why) {
    if (outcome(premise) == Outcome::pass && outcome(conclusion) == Outcome::fail)
      report.alarms.push_back(std::string(premise) + " passes but " + conclusion + " fails: " + why);
  };
  implies("bergmann-zero", "extreme-preserver", "B(e,e) = 0 characterizes extreme points");
  implies("bergmann-zero", "bp-preserver", "B(x,x^) = 0 pairs map to B(Tx,Ty) = 0");
  implies("strong-bp", "extreme-preserver", "extreme points are their own generalized inverse");
  implies("strong-bp", "bp-preserver", "strong BP preservation includes BP preservation");
  implies("triple-hom", "strong-regularity", "triple homomorphisms commute with generalized inverses");
  implies("strong-regularity", "triple-hom", "strong regularity preservers with extreme points are triple homs");
  implies("strong-bp", "triple-hom", "strong BP preservers with extreme points are triple homs");
  if (report.identities && outcome("extreme-preserver") == Outcome::pass &&
      report.identities->outcome == Outcome::fail)
    report.alarms.push_back("extreme-preserver passes but the unital identities fail");
  return report;
}

}  // namespace jbtk
