// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// JSON wire formats.
//
//   TripleSpace  {"blocks": [[m, n], ...]}
//   Element      {"space": TripleSpace, "blocks": [[[re, im], ...], ...]}   entries row-major per block
//   LinearMap    {"domain": TripleSpace, "codomain": TripleSpace, "matrix": [[re, im], ...]}
//                matrix is dim(codomain) x dim(domain), row-major
//   Generator    {"kind": "...", "seed": 42, ...}
//
// Generator kinds: identity, transpose, scalar, remark_nonunitary,
// remark_two_isometries, jordan_star_hom, triple_hom, extreme_times_jordan.

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "jbtk/linear_map.hpp"
#include "jbtk/maps.hpp"
#include "jbtk/matcore.hpp"

namespace jbtk {

using Json = nlohmann::json;

/// Malformed or inconsistent input document.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses text, reporting the byte offset on syntax errors.
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);

Json to_json(const TripleSpace& space);
Json to_json(const Element& x);
Json to_json(const LinearMap& t);
Json to_json(const Verdict& v);
Json to_json(const UnitaryIdentityReport& r);
Json to_json(const Factorization& f);
Json to_json(const ClassificationReport& r);

TripleSpace space_from_json(const Json& j);
/// If `space` is null the document must carry its own "space" key.
Element element_from_json(const Json& j, const TripleSpace* space = nullptr);
LinearMap map_from_json(const Json& j);
/// Builds a map from a generator spec.
LinearMap map_from_generator(const Json& j);
/// A document with a "kind" key is a generator spec, anything else a map.
LinearMap load_map(const Json& j);

}  // namespace jbtk
