// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "jbtk/gen.hpp"
#include "jbtk/json_io.hpp"

namespace jbtk {
namespace {

TEST(JsonIo, SpaceRoundTrip) {
  const TripleSpace s{{3, 2}, {1, 1}};
  EXPECT_EQ(to_json(s).dump(), R"({"blocks":[[3,2],[1,1]]})");
  EXPECT_EQ(space_from_json(to_json(s)), s);
}

TEST(JsonIo, ElementRoundTripIsExact) {
  const TripleSpace s{{2, 3}, {2, 2}};
  const Element x = random_element(s, full_rank_profile(s), 4);
  const Json j = parse_json(to_json(x).dump());
  EXPECT_EQ(element_from_json(j), x);
  EXPECT_EQ(element_from_json(j, &s), x);
}

TEST(JsonIo, ElementAcceptsRealNumbers) {
  const Json j = parse_json(R"({"space":{"blocks":[[1,2]]},"blocks":[[1.5,[0,2]]]})");
  const Element x = element_from_json(j);
  EXPECT_EQ(x.block(0)(0, 0), Complex(1.5, 0));
  EXPECT_EQ(x.block(0)(0, 1), Complex(0, 2));
}

TEST(JsonIo, MapRoundTrip) {
  const LinearMap t = remark_two_isometries().map;
  const LinearMap back = map_from_json(parse_json(to_json(t).dump()));
  EXPECT_EQ(back.domain(), t.domain());
  EXPECT_EQ(back.codomain(), t.codomain());
  EXPECT_EQ(distance(back, t), 0.0);
}

TEST(JsonIo, MalformedTextReportsOffset) {
  try {
    parse_json(R"({"blocks": [[1, 2]] )", "doc");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("doc"), std::string::npos);
  }
}

TEST(JsonIo, StructuralErrors) {
  EXPECT_THROW(space_from_json(parse_json(R"({"blocks": []})")), InputError);
  EXPECT_THROW(space_from_json(parse_json(R"({"blocks": [[0, 2]]})")), InputError);
  EXPECT_THROW(space_from_json(parse_json(R"({"shape": [[1, 1]]})")), InputError);
  EXPECT_THROW(element_from_json(parse_json(R"({"space":{"blocks":[[1,2]]},"blocks":[[1]]})")), SpaceMismatch);
  EXPECT_THROW(map_from_json(parse_json(R"({"domain":{"blocks":[[1,1]]},"codomain":{"blocks":[[1,2]]},"matrix":[1]})")),
               SpaceMismatch);
  EXPECT_THROW(read_json_file("/nonexistent/map.json"), InputError);
}

TEST(JsonIo, Generators) {
  EXPECT_EQ(load_map(parse_json(R"({"kind":"identity","space":{"blocks":[[2,2]]}})")).domain(),
            TripleSpace::matrices(2));
  EXPECT_EQ(load_map(parse_json(R"({"kind":"transpose","space":{"blocks":[[3,2]]}})")).codomain(),
            TripleSpace::rectangular(2, 3));
  const LinearMap sc = load_map(parse_json(R"({"kind":"scalar","space":{"blocks":[[1,1]]},"value":[0,2]})"));
  EXPECT_EQ(sc.matrix()(0, 0), Complex(0, 2));
  EXPECT_EQ(load_map(parse_json(R"({"kind":"remark_two_isometries"})")).codomain(), TripleSpace::rectangular(4, 2));

  const char* spec = R"({"kind":"jordan_star_hom","domain":{"blocks":[[2,2]]},"seed":42})";
  EXPECT_EQ(distance(load_map(parse_json(spec)), load_map(parse_json(spec))), 0.0);
  const LinearMap etj =
      load_map(parse_json(R"({"kind":"extreme_times_jordan","domain":{"blocks":[[2,2]]},"seed":1,"extra_rows":1})"));
  EXPECT_EQ(etj.domain(), TripleSpace::matrices(2));
}

TEST(JsonIo, GeneratorErrors) {
  EXPECT_THROW(load_map(parse_json(R"({"kind":"nope"})")), InputError);
  EXPECT_THROW(load_map(parse_json(R"({"kind":3})")), InputError);
  EXPECT_THROW(load_map(parse_json(R"({"kind":"triple_hom","domain":{"blocks":[[2,2]]},"seed":-1})")), InputError);
  EXPECT_THROW(load_map(parse_json(R"({"kind":"jordan_star_hom","domain":{"blocks":[[2,3]]},"seed":1})")),
               InfeasibleRecipe);
}

}  // namespace
}  // namespace jbtk
