// Copyright 2026 The jbtk Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "jbtk/gen.hpp"
#include "jbtk/maps.hpp"
#include "jbtk/regular.hpp"
#include "jbtk/triple.hpp"

namespace {

using namespace jbtk;

TripleSpace square(int n) { return TripleSpace::matrices(n); }

void BM_Svd(benchmark::State& state) {
  const TripleSpace s = square(static_cast<int>(state.range(0)));
  const Element x = random_element(s, full_rank_profile(s), 1);
  for (auto _ : state) benchmark::DoNotOptimize(svd(x));
}
BENCHMARK(BM_Svd)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_TripleProduct(benchmark::State& state) {
  const TripleSpace s = square(static_cast<int>(state.range(0)));
  const Element x = random_element(s, full_rank_profile(s), 1);
  const Element y = random_element(s, full_rank_profile(s), 2);
  for (auto _ : state) benchmark::DoNotOptimize(triple_product(x, y, x));
}
BENCHMARK(BM_TripleProduct)->Arg(4)->Arg(16);

void BM_GeneralizedInverse(benchmark::State& state) {
  const TripleSpace s{{4, 2}, {3, 3}};
  const Element x = random_element(s, {1, 2}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(generalized_inverse(x));
}
BENCHMARK(BM_GeneralizedInverse);

void BM_BergmannOperator(benchmark::State& state) {
  const TripleSpace s = square(static_cast<int>(state.range(0)));
  const Element x = random_element(s, full_rank_profile(s), 4);
  for (auto _ : state) benchmark::DoNotOptimize(bergmann(x, x));
}
BENCHMARK(BM_BergmannOperator)->Arg(2)->Arg(3)->Arg(4);

void BM_BpCharacterizations(benchmark::State& state) {
  const TripleSpace s{{3, 2}, {2, 2}};
  const Element x = random_element(s, full_rank_profile(s), 5);
  for (auto _ : state) benchmark::DoNotOptimize(is_bp_quasi_invertible(x));
}
BENCHMARK(BM_BpCharacterizations);

void BM_ClassifyTwoIsometries(benchmark::State& state) {
  const LinearMap t = remark_two_isometries().map;
  const SamplingOptions opts{.trials = static_cast<int>(state.range(0)), .seed = 0, .tol = {}};
  for (auto _ : state) benchmark::DoNotOptimize(classify(t, opts));
}
BENCHMARK(BM_ClassifyTwoIsometries)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_TripleHomCheck(benchmark::State& state) {
  const TripleSpace s{{2, 2}, {2, 1}};
  Rng rng(6);
  const LinearMap t = random_triple_hom(s, random_triple_recipe(s, rng), rng);
  for (auto _ : state) benchmark::DoNotOptimize(is_triple_hom(t));
}
BENCHMARK(BM_TripleHomCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
