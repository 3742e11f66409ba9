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

#include "fuzzypref/closure.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace fuzzypref {

int closure_iteration_cap(std::size_t n) noexcept {
  // bit_width(n - 1) == ceil(log2 n) for n >= 1
  const int ceil_log2 = n <= 1 ? 0 : static_cast<int>(std::bit_width(n - 1));
  return ceil_log2 + 2;
}

ClosureResult transitive_closure_report(const FuzzyRelation& r, TNormId t, Execution exec) {
  const std::size_t n = r.size();
  const bool par = use_parallel(exec, n);
  std::vector<double> q(r.data().begin(), r.data().end());
  std::vector<double> scratch(n * n);
  const int cap = closure_iteration_cap(n);

  int iterations = 0;
  bool converged = false;
  visit_tnorm(t, [&](auto tn) {
    using T = decltype(tn);
    while (iterations < cap) {
      ++iterations;
      if (!kernels::square_step<T>(q, n, scratch, par)) {
        converged = true;
        return;
      }
    }
  });
  return {with_data(r, std::move(q)), iterations, converged};
}

std::string_view to_string(ClosureVariant v) noexcept {
  switch (v) {
    case ClosureVariant::delta:
      return "delta";
    case ClosureVariant::nabla:
      return "nabla";
    case ClosureVariant::godel_star:
      return "godel_star";
  }
  return "delta";
}

ClosureVariant parse_closure_variant(std::string_view name) {
  if (name == "delta") return ClosureVariant::delta;
  if (name == "nabla") return ClosureVariant::nabla;
  if (name == "godel_star" || name == "star") return ClosureVariant::godel_star;
  throw ParseError("unknown closure variant '" + std::string(name) +
                   "' (expected delta, nabla or star)");
}

FuzzyRelation consistent_closure(const FuzzyRelation& r, TNormId t, ClosureVariant v,
                                 Execution exec) {
  if (v == ClosureVariant::godel_star && t != TNormId::godel) {
    throw PreconditionError("variant godel_star requires the godel tnorm, got " +
                            std::string(to_string(t)));
  }
  const FuzzyRelation tr = transitive_closure(r, t, exec);
  if (v == ClosureVariant::godel_star) return intersect(tr, unite(r, converse(r)));

  const std::size_t n = r.size();
  std::vector<double> out(n * n);
  visit_tnorm(t, [&](auto tn) {
    using T = decltype(tn);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        out[x * n + y] =
            v == ClosureVariant::delta
                ? std::max(r(x, y), T::conjoin(tr(x, y), r(y, x)))
                : T::conjoin(tr(x, y), std::max(r(x, y), r(y, x)));
      }
    }
  });
  return with_data(r, std::move(out));
}

}  // namespace fuzzypref
