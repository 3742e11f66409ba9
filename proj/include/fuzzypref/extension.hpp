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

// Compatibility / consistency predicates and the totalization procedure.
//
// A *-compatible extension Q of R satisfies R ⊆ Q and
//     Q(y,x) <= R(x,y) -> R(y,x)        for every ordered pair (x,y).
// R is *-consistent when its *-transitive closure is such an extension.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzypref/closure.hpp"
#include "fuzzypref/relation.hpp"

namespace fuzzypref {

/// First violated constraint found by a check, scanning row-major.
struct Violation {
  enum class Kind {
    inclusion,   // R(row,col) > Q(row,col)
    residuum,    // Q(row,col) > R(col,row) -> R(row,col)
    asymmetric,  // P_R(row,col) > P_Q(row,col)
  };
  Kind kind;
  std::size_t row;
  std::size_t col;
  double value;  // left-hand side at (row, col)
  double bound;  // what it had to stay below (+eps)
};

std::string_view to_string(Violation::Kind k) noexcept;
/// e.g. "Q(y,x) = 0.666... > R(x,y) -> R(y,x) = 0.333...".
std::string describe(const Violation& v, const Universe& u);

struct Verdict {
  bool holds = true;
  std::optional<Violation> violation;
  explicit operator bool() const noexcept { return holds; }
};

/// R ⊆ Q.
bool is_extension(const FuzzyRelation& r, const FuzzyRelation& q);

Verdict check_star_compatible_extension(const FuzzyRelation& r, const FuzzyRelation& q,
                                        TNormId t);
inline bool is_star_compatible_extension(const FuzzyRelation& r, const FuzzyRelation& q,
                                         TNormId t) {
  return check_star_compatible_extension(r, q, t).holds;
}

/// The negation-based notion: R ⊆ Q and P_R ⊆ P_Q.
Verdict check_compatible_extension_asym(const FuzzyRelation& r, const FuzzyRelation& q,
                                        TNormId t);
inline bool is_compatible_extension_asym(const FuzzyRelation& r, const FuzzyRelation& q,
                                         TNormId t) {
  return check_compatible_extension_asym(r, q, t).holds;
}

/// T(R)(y,x) <= R(x,y) -> R(y,x) for all x, y.
Verdict check_star_consistent(const FuzzyRelation& r, TNormId t,
                              Execution exec = Execution::automatic);
inline bool is_star_consistent(const FuzzyRelation& r, TNormId t) {
  return check_star_consistent(r, t).holds;
}

inline constexpr std::size_t kDefaultPathCap = 6;

/// Path form of consistency: for every x != y and every sequence of
/// pairwise-distinct intermediates t1..tm (1 <= m <= n),
///     R(y,t1) * R(t1,t2) * ... * R(tm,x) <= R(x,y) -> R(y,x).
/// Exponential in n; throws CapExceeded above `max_size`.
bool is_consistent_path_condition(const FuzzyRelation& r, TNormId t,
                                  std::size_t max_size = kDefaultPathCap);

enum class RelationClass { strict_partial_order, preorder, transitive, unrestricted };

/// "r1", "r2", "r3", "any".
std::string_view to_string(RelationClass c) noexcept;
RelationClass parse_relation_class(std::string_view name);

/// r1: irreflexive and *-transitive; r2: reflexive and *-transitive;
/// r3: *-transitive; any: always.
bool is_class_member(const FuzzyRelation& r, RelationClass c, TNormId t);

enum class ArcOrder { lexicographic, seeded_random };

struct TotalizeOptions {
  ArcOrder order = ArcOrder::lexicographic;
  std::uint64_t seed = 0;
  Execution exec = Execution::automatic;
};

struct ExtensionReport {
  FuzzyRelation result;
  std::vector<std::pair<std::string, std::string>> inserted_arcs;
  int iterations = 0;
  bool verified_total = false;
  bool verified_transitive = false;
  bool verified_star_compatible = false;
  bool verified_class_member = false;
  bool converged = true;

  bool all_verified() const noexcept {
    return verified_total && verified_transitive && verified_star_compatible &&
           verified_class_member && converged;
  }
};

/// Extends a *-transitive member of `c` to a total one.
///
/// While some distinct pair has Q(x,y) <= eps and Q(y,x) <= eps, pick one
/// (lexicographically least by default), set Q <- T(Q[x,y]) and record the
/// arc. Each step raises a zero entry to 1 for good, so the loop runs at
/// most n(n-1)/2 times. The returned flags are checked after the fact;
/// under Gödel the compatibility flag is guaranteed, for the other t-norms
/// it is measured.
///
/// Throws PreconditionError if R is not *-transitive or not in `c`.
ExtensionReport totalize(const FuzzyRelation& r, TNormId t, RelationClass c,
                         const TotalizeOptions& options = {});

/// Consistency check, closure, then totalize(T(R), t, transitive).
struct ConsistentExtension {
  bool consistent = false;
  /// Present only when R is *-consistent.
  std::optional<ExtensionReport> report;
  /// report->result is a *-compatible extension of R itself (not just of T(R)).
  bool compatible_with_original = false;
};

ConsistentExtension extend_consistent(const FuzzyRelation& r, TNormId t,
                                      const TotalizeOptions& options = {});

}  // namespace fuzzypref
