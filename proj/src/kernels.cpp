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

#include "fuzzypref/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fuzzypref {

bool use_parallel(Execution exec, std::size_t n) noexcept {
  switch (exec) {
    case Execution::serial:
      return false;
    case Execution::parallel:
      return true;
    case Execution::automatic:
      return n >= kParallelThreshold && parallel_threads() > 1;
  }
  return false;
}

void compose(TNormId t, std::span<const double> a, std::span<const double> b,
             std::size_t n, std::span<double> out, Execution exec) {
  const bool par = use_parallel(exec, n);
  visit_tnorm(t, [&](auto tn) {
    using T = decltype(tn);
    if (par) {
      kernels::compose_parallel<T>(a, b, n, out);
    } else {
      kernels::compose_serial<T>(a, b, n, out);
    }
  });
}

int parallel_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace fuzzypref
