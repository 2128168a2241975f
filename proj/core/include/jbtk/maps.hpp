// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Classification of linear maps between matrix triples.
//
// Predicates come in two kinds. Decisive checks sweep a finite basis and
// are exact up to tolerance because the condition is multilinear (Jordan
// homomorphism, triple homomorphism, the unital identities). Sampled checks
// quantify over nonlinear sets (extreme points, quasi-invertible elements):
// a pass is evidence, a fail comes with a certificate.
//
// Witnesses: decisive sweeps report the input with the largest residual
// (first in sweep order among ties); sampled checks report the first failing
// trial, probes before random trials.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jbtk/linear_map.hpp"
#include "jbtk/matcore.hpp"

namespace jbtk {

enum class Outcome { pass, fail, inapplicable };
enum class CheckKind { decisive, sampled };

const char* to_string(Outcome o);
const char* to_string(CheckKind k);

struct SamplingOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  Tolerances tol;
};

struct Verdict {
  std::string predicate;  ///< stable id, e.g. "strong-bp"
  Outcome outcome = Outcome::inapplicable;
  CheckKind kind = CheckKind::decisive;
  double worst_residual = 0.0;
  std::vector<Element> witness;  ///< one element, or an (x, y, z) triple
  std::string detail;
  int trials = 0;  ///< random trials evaluated
  int probes = 0;  ///< deterministic probes evaluated before the trials
  std::uint64_t seed = 0;

  bool passed() const noexcept { return outcome == Outcome::pass; }
  bool failed() const noexcept { return outcome == Outcome::fail; }
};

/// T(a^2) = T(a)^2 and T(a^*) = T(a)^*. Inapplicable unless both spaces are square-block.
Verdict is_jordan_star_hom(const LinearMap& t, const SamplingOptions& opts = {});
/// T{x,y,z} = {Tx,Ty,Tz} on all basis triples, with i e_j in the middle slot as well.
Verdict is_triple_hom(const LinearMap& t, const Tolerances& tol = {});
/// T maps extreme points of the domain ball to extreme points.
Verdict preserves_extreme_points(const LinearMap& t, const SamplingOptions& opts = {});
/// T maps BP quasi-invertible elements to BP quasi-invertible elements.
Verdict preserves_bp(const LinearMap& t, const SamplingOptions& opts = {});
/// preserves_bp and T(x^) = T(x)^ on BP quasi-invertible x.
Verdict strongly_preserves_bp(const LinearMap& t, const SamplingOptions& opts = {});
/// T(x^) = T(x)^ on regular x of every rank.
Verdict strongly_preserves_regularity(const LinearMap& t, const SamplingOptions& opts = {});
/// B(x,y) = 0 implies B(Tx,Ty) = 0, on pairs (x, x^) and (e, e).
Verdict preserves_bergmann_zero(const LinearMap& t, const SamplingOptions& opts = {});

/// Residuals of the identities every extreme-point preserver satisfies on
/// self-adjoint a, with v = T(1):
///   first:   T(a) = T(a) v^*v + v v^* T(a) - v T(a)^* v
///   second:  T(a^2) = T(a^2) v^*v + vv^* T(a^2) - 2 T(a)T(a)^* v - 2 v T(a)^*T(a)
///                     + 2 T(a) v^* T(a) + v T(a^2)^* v
///   partial: v^* T(a) v^* = v^*v T(a)^* v v^*
struct UnitaryIdentityReport {
  Outcome outcome = Outcome::inapplicable;
  double first_order = 0.0;
  double second_order = 0.0;
  double partial = 0.0;
  std::string detail;
};

UnitaryIdentityReport check_unitary_identities(const LinearMap& t, const Tolerances& tol = {});

/// Which side of the prime-codomain dichotomy v = T(1) falls on.
enum class PrimeAlternative { not_prime, isometry, coisometry, unitary, neither };
const char* to_string(PrimeAlternative p);

struct Factorization {
  Element v;             ///< T(1)
  LinearMap left;        ///< S(x) = v^* T(x)
  LinearMap right;       ///< S1(x) = T(x) v^*
  bool v_extreme = false;
  bool v_unitary = false;
  bool v_self_adjoint_unitary = false;
  bool v_isometry = false;    ///< v^* v = 1 per block
  bool v_coisometry = false;  ///< v v^* = 1 per block
  Verdict left_jordan;        ///< is_jordan_star_hom(S)
  Verdict right_jordan;       ///< is_jordan_star_hom(S1)
  double left_reconstruction = 0.0;   ///< ||T - v S||
  double right_reconstruction = 0.0;  ///< ||T - S1 v||
  double t_range_residual = 0.0;      ///< max over basis of ||T(x) - vv^* T(x) v^*v||
  double s_range_residual = 0.0;      ///< max over basis of ||S(x) - v^*v S(x) v^*v||
  PrimeAlternative prime = PrimeAlternative::not_prime;
};

/// Requires a unital domain; throws FactorizationRefused when T(1) is not a tripotent.
/// Reports each condition separately and asserts none of them.
Factorization factorize(const LinearMap& t, const SamplingOptions& opts = {});

struct ClassificationReport {
  std::vector<Verdict> verdicts;  ///< sorted by predicate id
  std::optional<UnitaryIdentityReport> identities;
  std::optional<Factorization> factorization;
  std::string factorization_error;
  std::vector<std::string> alarms;  ///< internal-consistency violations
  SamplingOptions options;

  const Verdict* find(const std::string& predicate) const;
};

/// Runs every predicate and cross-checks the implications that must hold.
ClassificationReport classify(const LinearMap& t, const SamplingOptions& opts = {});

}  // namespace jbtk
