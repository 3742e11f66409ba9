/*
 * Copyright 2026 The fuzzypref Authors
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

// Serial reference vs OpenMP kernels for sup-* composition and closure.

#include <benchmark/benchmark.h>

#include <random>

#include "fuzzypref/closure.hpp"
#include "fuzzypref/kernels.hpp"

namespace {

using namespace fuzzypref;

std::vector<double> random_matrix(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> d(n * n);
  for (auto& v : d) v = u(gen) < density ? u(gen) : 0.0;
  return d;
}

void BM_Compose(benchmark::State& state, TNormId t, Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 0.3, 1);
  const auto b = random_matrix(n, 0.3, 2);
  std::vector<double> out(n * n);
  for (auto _ : state) {
    compose(t, a, b, n, out, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["threads"] = exec == Execution::serial ? 1 : parallel_threads();
}

void BM_Closure(benchmark::State& state, TNormId t, Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const FuzzyRelation r(Universe::of_size(n), random_matrix(n, 4.0 / static_cast<double>(n), 3));
  for (auto _ : state) {
    auto res = transitive_closure_report(r, t, exec);
    benchmark::DoNotOptimize(res.iterations);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Compose, godel_serial, TNormId::godel, Execution::serial)
    ->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_CAPTURE(BM_Compose, godel_parallel, TNormId::godel, Execution::parallel)
    ->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_CAPTURE(BM_Compose, product_serial, TNormId::product, Execution::serial)
    ->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_CAPTURE(BM_Compose, product_parallel, TNormId::product, Execution::parallel)
    ->RangeMultiplier(2)->Range(64, 512);
BENCHMARK_CAPTURE(BM_Closure, godel_serial, TNormId::godel, Execution::serial)
    ->RangeMultiplier(2)->Range(64, 256);
BENCHMARK_CAPTURE(BM_Closure, godel_parallel, TNormId::godel, Execution::parallel)
    ->RangeMultiplier(2)->Range(64, 256);

BENCHMARK_MAIN();
