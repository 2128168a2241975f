// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include "jbtk/json_io.hpp"

#include <fstream>
#include <sstream>

#include "jbtk/errors.hpp"
#include "jbtk/gen.hpp"

namespace jbtk {

namespace {

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex pair_from_json(const Json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError(std::string(what) + ": expected a number or an [re, im] pair, got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

const Json& require(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + ": missing key \"" + key + "\"");
  return *it;
}

std::uint64_t seed_of(const Json& j) {
  auto it = j.find("seed");
  if (it == j.end()) return 0;
  if (!it->is_number_unsigned()) throw InputError("generator: \"seed\" must be a non-negative integer");
  return it->get<std::uint64_t>();
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

// ---------------------------------------------------------------------------
// Writers

Json to_json(const TripleSpace& space) {
  Json blocks = Json::array();
  for (const auto& b : space.blocks()) blocks.push_back({b.rows, b.cols});
  return {{"blocks", blocks}};
}

Json to_json(const Element& x) {
  Json blocks = Json::array();
  for (const auto& b : x.blocks()) {
    Json entries = Json::array();
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      for (Eigen::Index j = 0; j < b.cols(); ++j) entries.push_back(complex_pair(b(i, j)));
    blocks.push_back(entries);
  }
  return {{"space", to_json(x.space())}, {"blocks", blocks}};
}

Json to_json(const LinearMap& t) {
  Json m = Json::array();
  const CMatrix& a = t.matrix();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m.push_back(complex_pair(a(i, j)));
  return {{"domain", to_json(t.domain())}, {"codomain", to_json(t.codomain())}, {"matrix", m}};
}

Json to_json(const Verdict& v) {
  Json witness = Json::array();
  for (const auto& w : v.witness) witness.push_back(to_json(w)["blocks"]);
  return {{"predicate", v.predicate}, {"outcome", to_string(v.outcome)}, {"kind", to_string(v.kind)},
          {"worst_residual", v.worst_residual}, {"witness", witness}, {"detail", v.detail},
          {"trials", v.trials}, {"probes", v.probes}, {"seed", v.seed}};
}

Json to_json(const UnitaryIdentityReport& r) {
  return {{"outcome", to_string(r.outcome)}, {"first_order", r.first_order}, {"second_order", r.second_order},
          {"partial", r.partial}, {"detail", r.detail}};
}

Json to_json(const Factorization& f) {
  return {{"v", to_json(f.v)["blocks"]},
          {"v_extreme", f.v_extreme},
          {"v_unitary", f.v_unitary},
          {"v_self_adjoint_unitary", f.v_self_adjoint_unitary},
          {"v_isometry", f.v_isometry},
          {"v_coisometry", f.v_coisometry},
          {"left_jordan", to_json(f.left_jordan)},
          {"right_jordan", to_json(f.right_jordan)},
          {"left_reconstruction", f.left_reconstruction},
          {"right_reconstruction", f.right_reconstruction},
          {"t_range_residual", f.t_range_residual},
          {"s_range_residual", f.s_range_residual},
          {"prime", to_string(f.prime)}};
}

Json to_json(const ClassificationReport& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  Json out = {{"verdicts", verdicts},
              {"alarms", r.alarms},
              {"trials", r.options.trials},
              {"seed", r.options.seed},
              {"tol", r.options.tol.zero_tol}};
  out["identities"] = r.identities ? to_json(*r.identities) : Json(nullptr);
  out["factorization"] = r.factorization ? to_json(*r.factorization) : Json(nullptr);
  if (!r.factorization_error.empty()) out["factorization_error"] = r.factorization_error;
  return out;
}

// ---------------------------------------------------------------------------
// Readers

TripleSpace space_from_json(const Json& j) {
  const Json& blocks = require(j, "blocks", "TripleSpace");
  if (!blocks.is_array() || blocks.empty()) throw InputError("TripleSpace: \"blocks\" must be a non-empty array");
  std::vector<BlockShape> shapes;
  for (const auto& b : blocks) {
    if (!b.is_array() || b.size() != 2 || !b[0].is_number_integer() || !b[1].is_number_integer())
      throw InputError("TripleSpace: each block must be [rows, cols], got " + b.dump());
    const int m = b[0].get<int>(), n = b[1].get<int>();
    if (m < 1 || n < 1) throw InputError("TripleSpace: block dimensions must be positive, got " + b.dump());
    shapes.push_back({m, n});
  }
  return TripleSpace(std::move(shapes));
}

Element element_from_json(const Json& j, const TripleSpace* space) {
  const TripleSpace s = space ? *space : space_from_json(require(j, "space", "Element"));
  const Json& blocks = require(j, "blocks", "Element");
  if (!blocks.is_array() || blocks.size() != s.num_blocks())
    throw SpaceMismatch("Element: expected " + std::to_string(s.num_blocks()) + " blocks");
  std::vector<CMatrix> out;
  for (std::size_t k = 0; k < s.num_blocks(); ++k) {
    const auto& shape = s.block(k);
    const Json& entries = blocks[k];
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(shape.size()))
      throw SpaceMismatch("Element: block " + std::to_string(k) + " needs " + std::to_string(shape.size()) +
                          " entries");
    CMatrix b(shape.rows, shape.cols);
    for (int i = 0; i < shape.rows; ++i)
      for (int c = 0; c < shape.cols; ++c) b(i, c) = pair_from_json(entries[i * shape.cols + c], "Element");
    out.push_back(std::move(b));
  }
  return Element(s, std::move(out));
}

LinearMap map_from_json(const Json& j) {
  const TripleSpace domain = space_from_json(require(j, "domain", "LinearMap"));
  const TripleSpace codomain = space_from_json(require(j, "codomain", "LinearMap"));
  const Json& m = require(j, "matrix", "LinearMap");
  const std::size_t rows = codomain.dim(), cols = domain.dim();
  if (!m.is_array() || m.size() != rows * cols)
    throw SpaceMismatch("LinearMap: matrix needs " + std::to_string(rows * cols) + " entries (" +
                        std::to_string(rows) + "x" + std::to_string(cols) + "), got " +
                        std::to_string(m.is_array() ? m.size() : 0));
  CMatrix a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = pair_from_json(m[i * cols + c], "LinearMap");
  return LinearMap(domain, codomain, std::move(a));
}

LinearMap map_from_generator(const Json& j) {
  const Json& kind_j = require(j, "kind", "generator");
  if (!kind_j.is_string()) throw InputError("generator: \"kind\" must be a string");
  const std::string kind = kind_j.get<std::string>();

  if (kind == "remark_nonunitary") return remark_nonunitary().map;
  if (kind == "remark_two_isometries") return remark_two_isometries().map;
  if (kind == "identity") return LinearMap::identity(space_from_json(require(j, "space", "generator")));
  if (kind == "transpose") return LinearMap::transpose(space_from_json(require(j, "space", "generator")));
  if (kind == "scalar") {
    const TripleSpace s = space_from_json(require(j, "space", "generator"));
    return Complex(pair_from_json(require(j, "value", "generator"), "generator")) * LinearMap::identity(s);
  }

  const TripleSpace domain = space_from_json(require(j, "domain", "generator"));
  Rng rng(seed_of(j));
  if (kind == "jordan_star_hom") return random_jordan_star_hom(domain, random_unital_recipe(domain, rng), rng);
  if (kind == "triple_hom") return random_triple_hom(domain, random_triple_recipe(domain, rng), rng);
  if (kind == "extreme_times_jordan") {
    const auto recipe = random_unital_recipe(domain, rng);
    std::vector<int> extra(recipe.targets.size(), 0);
    if (auto it = j.find("extra_rows"); it != j.end()) {
      if (!it->is_number_integer() || it->get<int>() < 0)
        throw InputError("generator: \"extra_rows\" must be a non-negative integer");
      std::fill(extra.begin(), extra.end(), it->get<int>());
    }
    return random_extreme_times_jordan(domain, recipe, extra, rng).t;
  }
  throw InputError("generator: unknown kind \"" + kind + "\"");
}

LinearMap load_map(const Json& j) {
  if (j.is_object() && j.contains("kind")) return map_from_generator(j);
  return map_from_json(j);
}

}  // namespace jbtk
