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

// Dense sup-t-norm matrix kernels.
//
// Every kernel exists twice: a serial reference and an OpenMP version that
// splits work by output rows. Entries are combined only with max and the
// t-norm, both evaluated in the same order inside a row, so the two
// versions agree bit for bit. Tests pin that.

#pragma once

#include <cstddef>
#include <span>

#include "fuzzypref/tnorm.hpp"

namespace fuzzypref {

enum class Execution { serial, parallel, automatic };

/// Below this universe size `automatic` runs serially.
inline constexpr std::size_t kParallelThreshold = 64;

namespace kernels {

/// out(i,k) = max_j a(i,j) * b(j,k) over n x n row-major matrices.
/// `out` must not alias `a` or `b`.
template <ResiduatedTNorm T>
void compose_serial(std::span<const double> a, std::span<const double> b,
                    std::size_t n, std::span<double> out) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    double* row = out.data() + i * n;
    for (std::size_t k = 0; k < n; ++k) row[k] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double aij = a[i * n + j];
      if (aij == 0.0) continue;  // 0 * x = 0 for every t-norm
      const double* brow = b.data() + j * n;
      for (std::size_t k = 0; k < n; ++k) {
        const double v = T::conjoin(aij, brow[k]);
        if (v > row[k]) row[k] = v;
      }
    }
  }
}

template <ResiduatedTNorm T>
void compose_parallel(std::span<const double> a, std::span<const double> b,
                      std::size_t n, std::span<double> out) noexcept {
  const auto rows = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    double* row = out.data() + i * n;
    for (std::size_t k = 0; k < n; ++k) row[k] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double aij = a[i * n + j];
      if (aij == 0.0) continue;
      const double* brow = b.data() + j * n;
      for (std::size_t k = 0; k < n; ++k) {
        const double v = T::conjoin(aij, brow[k]);
        if (v > row[k]) row[k] = v;
      }
    }
  }
}

/// q <- q ∪ (q ∘ q), using `scratch` (size n*n) for the product.
/// Returns true if any entry changed.
template <ResiduatedTNorm T>
bool square_step(std::span<double> q, std::size_t n, std::span<double> scratch,
                 bool parallel) noexcept {
  if (parallel) {
    compose_parallel<T>(q, q, n, scratch);
  } else {
    compose_serial<T>(q, q, n, scratch);
  }
  bool changed = false;
  for (std::size_t k = 0; k < n * n; ++k) {
    if (scratch[k] > q[k]) {
      q[k] = scratch[k];
      changed = true;
    }
  }
  return changed;
}

}  // namespace kernels

bool use_parallel(Execution exec, std::size_t n) noexcept;

/// Runtime-dispatched composition; see kernels::compose_serial.
void compose(TNormId t, std::span<const double> a, std::span<const double> b,
             std::size_t n, std::span<double> out, Execution exec = Execution::automatic);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int parallel_threads() noexcept;

}  // namespace fuzzypref
