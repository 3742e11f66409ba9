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

// Exhaustive ground truth on tiny universes.
//
// Sweeps enumerate every grid-valued relation and check a property
// against code that is independent of the implementation being verified
// (own closure, own crisp bit-set algebra). Sweeps split the index range
// across OpenMP threads; the reported counterexample is always the one with
// the smallest index, so reports do not depend on the thread count.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fuzzypref/extension.hpp"
#include "fuzzypref/io.hpp"
#include "fuzzypref/kernels.hpp"

namespace fuzzypref {

struct GridSpec {
  std::size_t universe_size = 2;
  std::vector<double> values = {0.0, 0.5, 1.0};
  std::uint64_t cap = std::uint64_t{1} << 25;
};

/// Every n x n matrix over the grid values, indexed by a row-major odometer
/// (the last entry turns fastest, values ascending).
class RelationGrid {
 public:
  /// Throws CapExceeded, RangeError or PreconditionError for bad specs.
  explicit RelationGrid(GridSpec spec);

  const GridSpec& spec() const noexcept { return spec_; }
  std::uint64_t count() const noexcept { return count_; }
  const Universe& universe() const noexcept { return universe_; }

  FuzzyRelation at(std::uint64_t index) const;

  void for_each(const std::function<void(std::uint64_t, const FuzzyRelation&)>& f) const;

 private:
  GridSpec spec_;
  Universe universe_;
  std::uint64_t count_ = 0;
};

inline RelationGrid enumerate_relations(GridSpec spec) { return RelationGrid(std::move(spec)); }

struct OracleReport {
  std::string property;
  std::optional<GridSpec> grid;
  std::optional<TNormId> tnorm;
  std::optional<RelationClass> relation_class;
  std::uint64_t instances_checked = 0;
  /// Instances a filter excluded before checking (e.g. inconsistent inputs).
  std::uint64_t instances_skipped = 0;
  std::uint64_t violations = 0;
  std::optional<Json> first_counterexample;

  bool passed() const noexcept { return violations == 0; }
};

Json to_json(const OracleReport& r);

/// Gödel consistent closure R* is ⊇ R, ∧-consistent, and below every
/// ∧-consistent grid relation containing R.
OracleReport verify_least_consistent_closure(const GridSpec& g,
                                             Execution exec = Execution::automatic);

/// Crisp |X| = 3: for each consistent R with T(R) in class c, the
/// intersection of all total, transitive, compatible extensions of R in c
/// equals T(R).
OracleReport verify_crisp_duggan_intersection(RelationClass c,
                                              Execution exec = Execution::automatic);

/// is_star_consistent agrees with is_consistent_path_condition on every
/// grid relation.
OracleReport verify_consistency_equivalence(const GridSpec& g, TNormId t,
                                            Execution exec = Execution::automatic);

/// Residuated-lattice laws on the grid {0, step, ..., 1}: adjunction,
/// the basic residuum inequalities, negation laws, and distributivity of
/// the t-norm / residuum over binary suprema. `step` must divide 1.
OracleReport verify_adjunction_grid(TNormId t, double step);

namespace detail {
struct LawFailure {
  std::string law;
  double a, b, c;
};
std::vector<double> unit_grid(double step);
}  // namespace detail

/// Law checks for any t-norm type; verify_adjunction_grid uses this. Use
/// it to vet a user-supplied t-norm before handing it to the kernels.
template <ResiduatedTNorm T>
std::pair<std::uint64_t, std::vector<detail::LawFailure>> check_residuated_laws(double step) {
  const std::vector<double> grid = detail::unit_grid(step);
  const auto conj = [](double a, double b) { return static_cast<double>(T::conjoin(a, b)); };
  const auto res = [](double a, double b) { return static_cast<double>(T::residuum(a, b)); };
  const auto neg = [&](double a) { return res(a, 0.0); };

  std::vector<detail::LawFailure> fails;
  std::uint64_t checked = 0;
  const auto expect = [&](bool ok, const char* law, double a, double b, double c) {
    if (!ok) fails.push_back({law, a, b, c});
  };
  for (double a : grid) {
    for (double b : grid) {
      for (double c : grid) {
        ++checked;
        expect(approx_le(conj(a, b), c) == approx_le(a, res(b, c)), "adjunction", a, b, c);
        // distributivity over the binary supremum a ∨ b
        expect(approx_eq(conj(std::max(a, b), c), std::max(conj(a, c), conj(b, c))),
               "sup-distributivity", a, b, c);
        expect(approx_eq(res(std::max(a, b), c), std::min(res(a, c), res(b, c))),
               "residuum-sup", a, b, c);
      }
      expect(approx_le(conj(a, res(a, b)), std::min(a, b)), "modus-ponens", a, b, 0);
      expect(approx_le(conj(a, b), a) && approx_le(conj(a, b), b), "lower-bound", a, b, 0);
      expect(approx_eq(conj(a, b), conj(b, a)), "commutativity", a, b, 0);
      expect(approx_le(b, res(a, b)), "residuum-upper", a, b, 0);
      expect(approx_le(a, b) == approx_eq(res(a, b), 1.0), "order-residuum", a, b, 0);
      expect(approx_le(a, neg(b)) == approx_zero(conj(a, b)), "negation-adjunction", a, b, 0);
    }
    expect(approx_eq(res(1.0, a), a), "unit-residuum", a, 0, 0);
    expect(approx_eq(res(a, a), 1.0), "self-residuum", a, 0, 0);
    expect(approx_zero(conj(a, neg(a))), "contradiction", a, 0, 0);
    expect(approx_eq(conj(a, 1.0), a), "unit", a, 0, 0);
  }
  return {checked, std::move(fails)};
}

}  // namespace fuzzypref
