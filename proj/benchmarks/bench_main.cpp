/*
 * Copyright 2026 The wittkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <random>

#include "wittkit/census.hpp"

namespace {

using namespace wittkit;

RingHandle ring_for(int which) {
  switch (which) {
    case 0: return Ring::integers();
    case 1: return Ring::modular(7);
    default: return Ring::polynomial(Ring::integers(), {"a", "b", "c"});
  }
}

Element random_entry(const RingHandle& r, std::mt19937_64& gen) {
  std::uniform_int_distribution<long> small(-3, 3);
  Element e = Element::from_int(r, small(gen));
  if (r->has_polynomial_payload() && gen() % 2) e = e * Element::variable(r, r->variables()[gen() % 3]);
  return e;
}

Matrix random_square(const RingHandle& r, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Matrix m(r, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_entry(r, gen));
  return m;
}

AlternatingMatrix random_alternating(const RingHandle& r, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Matrix m(r, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Element e = random_entry(r, gen);
      m.set(i, j, e);
      m.set(j, i, -e);
    }
  return AlternatingMatrix(m);
}

// range(0): ring (0 = Z, 1 = Z/7, 2 = Z[a,b,c]); range(1): size.
void BM_Det(benchmark::State& state) {
  const Matrix m = random_square(ring_for(static_cast<int>(state.range(0))), static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Det)->ArgsProduct({{0, 1, 2}, {4, 8, 12}});

void BM_Pfaffian(benchmark::State& state) {
  const AlternatingMatrix m =
      random_alternating(ring_for(static_cast<int>(state.range(0))), static_cast<std::size_t>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(m));
}
BENCHMARK(BM_Pfaffian)->ArgsProduct({{0, 1, 2}, {4, 8, 12}});

void BM_SuslinDet(benchmark::State& state) {
  const auto r = Ring::polynomial(Ring::integers(), {"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"});
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Element> a, b;
  for (std::size_t i = 1; i <= n; ++i) {
    a.push_back(Element::variable(r, "a" + std::to_string(i)));
    b.push_back(Element::variable(r, "b" + std::to_string(i)));
  }
  const Matrix s = suslin_matrix(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(det(s));
}
BENCHMARK(BM_SuslinDet)->DenseRange(2, 4);

void BM_CensusAlt4(benchmark::State& state) {
  CensusJob job;
  job.ring = Ring::modular(state.range(0));
  job.kind = ObjectKind::AlternatingInvertible;
  job.n = 4;
  job.generators = GeneratorSet::E;
  for (auto _ : state) benchmark::DoNotOptimize(orbit_bfs(job).orbits.size());
}
BENCHMARK(BM_CensusAlt4)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CensusRows(benchmark::State& state) {
  CensusJob job;
  job.ring = Ring::modular(state.range(0));
  job.kind = ObjectKind::UnimodularRows;
  job.n = 3;
  job.generators = GeneratorSet::E;
  for (auto _ : state) benchmark::DoNotOptimize(orbit_bfs(job).orbits.size());
}
BENCHMARK(BM_CensusRows)->Arg(2)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
