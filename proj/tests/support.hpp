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

// Shared fixtures and random generators for the test binaries. Nothing in
// here calls the closure or extension modules; generators that need a
// transitive relation build one by construction or with the local
// Floyd-Warshall below.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "fuzzypref/relation.hpp"

namespace fuzzypref::testing {

inline FuzzyRelation rel(std::vector<std::string> labels,
                         const std::vector<std::vector<double>>& rows) {
  return FuzzyRelation::from_rows(Universe(std::move(labels)), rows);
}

// Worked matrices.
inline FuzzyRelation pair_r() { return rel({"x", "y"}, {{1, 0.5}, {1.0 / 3, 1}}); }
inline FuzzyRelation pair_q() { return rel({"x", "y"}, {{1, 2.0 / 3}, {2.0 / 3, 1}}); }
inline FuzzyRelation product_pair_r() { return rel({"x", "y"}, {{1, 1.0 / 3}, {0.5, 1}}); }
inline FuzzyRelation triple_r() {
  return rel({"x", "y", "z"}, {{1, 1.0 / 3, 1}, {0.25, 1, 0.5}, {0.5, 1, 1}});
}

inline FuzzyRelation crisp(std::size_t n, std::vector<std::pair<std::string, std::string>> pairs) {
  return FuzzyRelation::from_crisp(Universe::of_size(n), pairs);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen_); }
  bool chance(double p) { return uniform() < p; }
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_);
  }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_);
  }

  /// Half the time a quarter-grid value (exercises ties, 0 and 1), else
  /// uniform in [0,1].
  double degree() {
    static constexpr double grid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    return chance(0.5) ? grid[index(5)] : uniform();
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline FuzzyRelation random_relation(Rng& rng, std::size_t n, double density = 1.0) {
  std::vector<double> d(n * n);
  for (auto& v : d) v = rng.chance(density) ? rng.degree() : 0.0;
  return FuzzyRelation(Universe::of_size(n), std::move(d));
}

/// Floyd-Warshall over (max, min). Exact Gödel closure, local to the tests.
inline FuzzyRelation godel_closure_fw(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  std::vector<double> t(r.data().begin(), r.data().end());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        t[i * n + j] = std::max(t[i * n + j], std::min(t[i * n + k], t[k * n + j]));
  return FuzzyRelation(r.universe(), std::move(t));
}

/// Q(x,y) = min_k (g_k(x) -> g_k(y)) for random fuzzy sets g_k: reflexive
/// and *-transitive for any residuated t-norm.
template <ResiduatedTNorm T>
FuzzyRelation random_residual_preorder(Rng& rng, std::size_t n, std::size_t sets = 2) {
  std::vector<std::vector<double>> g(sets, std::vector<double>(n));
  for (auto& s : g)
    for (auto& v : s) v = rng.degree();
  std::vector<double> d(n * n, 1.0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& s : g) d[x * n + y] = std::min(d[x * n + y], T::residuum(s[x], s[y]));
  return FuzzyRelation(Universe::of_size(n), std::move(d));
}

/// Random Gödel strict partial order: arcs only forward along a random
/// permutation, then closed.
inline FuzzyRelation random_strict_partial_order(Rng& rng, std::size_t n, double density = 0.3) {
  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng.engine());
  std::vector<double> d(n * n, 0.0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (rank[x] < rank[y] && rng.chance(density)) d[x * n + y] = rng.uniform();
  return godel_closure_fw(FuzzyRelation(Universe::of_size(n), std::move(d)));
}

inline FuzzyRelation random_godel_preorder(Rng& rng, std::size_t n, double density = 0.3) {
  FuzzyRelation r = random_relation(rng, n, density);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i, Degree::one());
  return godel_closure_fw(r);
}

inline FuzzyRelation random_godel_transitive(Rng& rng, std::size_t n, double density = 0.3) {
  return godel_closure_fw(random_relation(rng, n, density));
}

/// Scales every entry of q by an independent factor in [0,1]: a random
/// sub-relation.
inline FuzzyRelation random_subrelation(Rng& rng, const FuzzyRelation& q) {
  std::vector<double> d(q.data().begin(), q.data().end());
  for (auto& v : d) v = rng.chance(0.3) ? v : v * rng.uniform();
  return FuzzyRelation(q.universe(), std::move(d));
}

/// Random Q with R ⊆ Q and Q(y,x) <= R(x,y) -> R(y,x): every entry drawn
/// between its lower and upper bound.
template <ResiduatedTNorm T>
FuzzyRelation random_compatible_extension(Rng& rng, const FuzzyRelation& r) {
  const std::size_t n = r.size();
  std::vector<double> d(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      const double lo = r(y, x);
      const double hi = std::max(lo, static_cast<double>(T::residuum(r(x, y), r(y, x))));
      const double u = rng.chance(0.3) ? (rng.chance(0.5) ? 0.0 : 1.0) : rng.uniform();
      d[y * n + x] = std::min(1.0, lo + u * (hi - lo));
    }
  }
  return FuzzyRelation(r.universe(), std::move(d));
}

/// sup over all paths x -> t1 -> ... -> tm -> y with 0 <= m <= n-1 of the
/// t-norm product, by brute-force enumeration (repeats allowed).
template <ResiduatedTNorm T>
FuzzyRelation path_supremum_closure(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      double best = r(x, y);
      std::vector<std::size_t> seq;
      for (std::size_t m = 1; m <= n - 1; ++m) {
        seq.assign(m, 0);
        for (;;) {
          double v = r(x, seq[0]);
          for (std::size_t k = 0; k + 1 < m; ++k) v = T::conjoin(v, r(seq[k], seq[k + 1]));
          v = T::conjoin(v, r(seq[m - 1], y));
          best = std::max(best, v);
          std::size_t pos = m;
          while (pos > 0 && ++seq[pos - 1] == n) seq[--pos] = 0;
          if (pos == 0) break;
        }
      }
      out[x * n + y] = best;
    }
  }
  return FuzzyRelation(r.universe(), std::move(out));
}

}  // namespace fuzzypref::testing
