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

#pragma once

#include <string_view>

#include "fuzzypref/kernels.hpp"
#include "fuzzypref/relation.hpp"

namespace fuzzypref {

struct ClosureResult {
  FuzzyRelation relation;
  int iterations = 0;
  /// False only if the iteration cap was hit before a fixpoint.
  bool converged = true;
};

/// ceil(log2 n) + 2: squarings needed to cover every simple path, plus one
/// confirming step, plus one of slack for floating-point drift.
int closure_iteration_cap(std::size_t n) noexcept;

/// Least *-transitive relation containing R.
///
/// Iterates Q <- Q ∪ (Q ∘ Q) with the sup-* composition until no entry
/// changes (exact comparison; the sequence is monotone and bounded). After
/// k steps every path of length <= 2^k is accounted for, and path suprema
/// are attained on simple paths, so ceil(log2 n) + 1 steps suffice in exact
/// arithmetic.
ClosureResult transitive_closure_report(const FuzzyRelation& r, TNormId t,
                                        Execution exec = Execution::automatic);

inline FuzzyRelation transitive_closure(const FuzzyRelation& r, TNormId t,
                                        Execution exec = Execution::automatic) {
  return transitive_closure_report(r, t, exec).relation;
}

enum class ClosureVariant { delta, nabla, godel_star };

/// "delta", "nabla", "godel_star".
std::string_view to_string(ClosureVariant v) noexcept;
/// Accepts the to_string names plus "star" for godel_star.
ClosureVariant parse_closure_variant(std::string_view name);

/// Consistent closures:
///   delta:      R(x,y) ∨ [T(R)(x,y) * R(y,x)]
///   nabla:      T(R)(x,y) * [R(x,y) ∨ R(y,x)]
///   godel_star: T(R) ∩ (R ∪ R⁻¹), Gödel only (PreconditionError otherwise).
FuzzyRelation consistent_closure(const FuzzyRelation& r, TNormId t, ClosureVariant v,
                                 Execution exec = Execution::automatic);

}  // namespace fuzzypref
