// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Seeded property suites behind `jbtk verify`.
//
// Instance counts scale with `trials`; at the default of 100 they are:
//   identities  100 random instances per space, 20 constructed preservers
//   regularity  500 elements per space, 100 orthogonal pairs, 50 cubic-root limits
//   preservers  50 triple homs, 50 products v S, 10 perturbed maps
//   remarks     fixed counterexample maps, 20 sampled points, 50 trials per predicate

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "jbtk/matcore.hpp"

namespace jbtk::cli {

struct SuiteConfig {
  int trials = 100;
  std::uint64_t seed = 0;
  Tolerances tol;
};

struct Assertion {
  std::string id;      ///< "<suite>.<check>[.<space>]"
  std::string anchor;  ///< the statement being checked
  double residual = 0.0;
  double tolerance = 0.0;
  int instances = 0;
  bool passed = true;
  std::string witness;  ///< first failing instance, empty on pass
  std::string note;     ///< counts or verdict details
};

const std::vector<std::string>& suite_names();
/// "all" runs every suite. Throws std::invalid_argument on an unknown name.
/// Results are sorted by id.
std::vector<Assertion> run_suite(const std::string& name, const SuiteConfig& cfg);

std::vector<Assertion> identities_suite(const SuiteConfig& cfg);
std::vector<Assertion> regularity_suite(const SuiteConfig& cfg);
std::vector<Assertion> preservers_suite(const SuiteConfig& cfg);
std::vector<Assertion> remarks_suite(const SuiteConfig& cfg);

nlohmann::json to_json(const Assertion& a);

}  // namespace jbtk::cli
