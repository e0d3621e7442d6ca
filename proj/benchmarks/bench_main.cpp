// Copyright 2026 The latstab Authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "latstab/bhw.hpp"
#include "latstab/enumeration.hpp"
#include "latstab/lp.hpp"
#include "latstab/minima.hpp"
#include "latstab/stability.hpp"

namespace {

using namespace latstab;

AxisBox cube(std::size_t d, Rational a) { return AxisBox(std::vector<Rational>(d, a)); }

void BM_CountRotatedBox(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const RotatedBox body(cube(d, Rational(23, 10)), random_rotation(d, 1, 0.05));
  for (auto _ : state) benchmark::DoNotOptimize(count_lattice_points(body).count);
}
BENCHMARK(BM_CountRotatedBox)->DenseRange(2, 5);

void BM_CountLpBall(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const LpBall body(Exponent(2.5), std::vector<Rational>(d, Rational(23, 10)));
  for (auto _ : state) benchmark::DoNotOptimize(count_lattice_points(body).count);
}
BENCHMARK(BM_CountLpBall)->DenseRange(2, 5);

void BM_MinimaBox(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const AxisBox body = cube(d, Rational(17, 10));
  for (auto _ : state) benchmark::DoNotOptimize(successive_minima(body).lambdas);
}
BENCHMARK(BM_MinimaBox)->DenseRange(2, 6);

void BM_MinimaRotated(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const RotatedBox body(cube(d, Rational(17, 10)), random_rotation(d, 2, 0.5));
  for (auto _ : state) benchmark::DoNotOptimize(successive_minima(body).lambdas);
}
BENCHMARK(BM_MinimaRotated)->DenseRange(2, 5);

void BM_VerifyRotated(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const RotatedBox body(cube(d, Rational(3, 2)), random_rotation(d, 3, 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(verify(body).status);
}
BENCHMARK(BM_VerifyRotated)->DenseRange(2, 4);

void BM_EmpiricalThreshold(benchmark::State& state) {
  const AxisBox body(std::vector<Rational>{Rational(23, 10), Rational(17, 10), Rational(13, 10)});
  for (auto _ : state) benchmark::DoNotOptimize(empirical_threshold(body));
}
BENCHMARK(BM_EmpiricalThreshold);

}  // namespace

BENCHMARK_MAIN();
