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

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzypref/degree.hpp"
#include "fuzzypref/tnorm.hpp"

namespace fuzzypref {

/// Ordered list of distinct alternative labels. The order fixes matrix
/// indexing; two universes are equal only if their label sequences are.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels);

  /// Labels "a", "b", ... (then "x26", "x27", ... past 26).
  static Universe of_size(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Throws UnknownLabel.
  std::size_t index_of(std::string_view label) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A fuzzy relation R : X^2 -> [0,1] over a finite universe, stored dense
/// and row-major: entry (i, j) is R(x_i, x_j).
class FuzzyRelation {
 public:
  /// Validates shape and range; errors name the offending labels.
  FuzzyRelation(Universe universe, std::vector<double> row_major);

  static FuzzyRelation from_rows(Universe universe,
                                 const std::vector<std::vector<double>>& rows);
  static FuzzyRelation zeros(Universe universe);
  static FuzzyRelation identity(Universe universe);
  /// {0,1}-valued relation holding exactly the listed pairs.
  static FuzzyRelation from_crisp(
      Universe universe,
      std::span<const std::pair<std::string, std::string>> pairs);

  std::size_t size() const noexcept { return universe_->size(); }
  const Universe& universe() const noexcept { return *universe_; }
  bool same_universe(const FuzzyRelation& other) const noexcept {
    return universe_ == other.universe_ || *universe_ == *other.universe_;
  }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * size() + j];
  }
  Degree degree(std::size_t i, std::size_t j) const { return Degree(data_.at(i * size() + j)); }
  double at(std::string_view x, std::string_view y) const;

  void set(std::size_t i, std::size_t j, Degree d) {
    data_.at(i * size() + j) = d.value();
  }

  std::span<const double> data() const noexcept { return data_; }
  std::vector<std::vector<double>> rows() const;

  /// Exact entrywise equality on identical universes.
  friend bool operator==(const FuzzyRelation& a, const FuzzyRelation& b) {
    return a.same_universe(b) && a.data_ == b.data_;
  }

 private:
  // Unchecked: callers guarantee shape and range.
  struct Trusted {};
  FuzzyRelation(std::shared_ptr<const Universe> u, std::vector<double> data, Trusted)
      : universe_(std::move(u)), data_(std::move(data)) {}

  friend FuzzyRelation with_data(const FuzzyRelation&, std::vector<double>);

  std::shared_ptr<const Universe> universe_;
  std::vector<double> data_;
};

/// Same universe as `like`, new entries. Entries must already be valid
/// degrees; used by kernels that produce them by construction.
FuzzyRelation with_data(const FuzzyRelation& like, std::vector<double> data);

// Pointwise lattice operations. All throw UniverseMismatch.
FuzzyRelation unite(const FuzzyRelation& r, const FuzzyRelation& q);
FuzzyRelation intersect(const FuzzyRelation& r, const FuzzyRelation& q);
/// R ⊆ Q: R(x,y) <= Q(x,y) + eps everywhere.
bool is_included(const FuzzyRelation& r, const FuzzyRelation& q);
/// Entrywise |R - Q| <= eps.
bool approx_equal(const FuzzyRelation& r, const FuzzyRelation& q, double eps = kEpsilon);
FuzzyRelation converse(const FuzzyRelation& r);

/// P_R(x,y) = R(x,y) * ¬R(y,x).
FuzzyRelation asymmetric_part(const FuzzyRelation& r, TNormId t);

bool is_reflexive(const FuzzyRelation& r);
bool is_irreflexive(const FuzzyRelation& r);
/// R(x,y) * R(y,z) <= R(x,z) + eps for all x, y, z.
bool is_transitive(const FuzzyRelation& r, TNormId t);
/// R(x,y) > eps or R(y,x) > eps for all distinct x, y.
bool is_total(const FuzzyRelation& r);
/// R(x,y) = 1 or R(y,x) = 1 (within eps) for all distinct x, y.
bool is_strongly_total(const FuzzyRelation& r);
bool is_crisp(const FuzzyRelation& r);

/// R[x,y]: entry (x,y) set to 1, everything else unchanged.
FuzzyRelation insert_arc(const FuzzyRelation& r, std::size_t x, std::size_t y);
FuzzyRelation insert_arc(const FuzzyRelation& r, std::string_view x, std::string_view y);

template <ResiduatedTNorm T>
bool is_transitive_with(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const double rxy = r(x, y);
      if (rxy == 0.0) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (!approx_le(T::conjoin(rxy, r(y, z)), r(x, z))) return false;
      }
    }
  }
  return true;
}

}  // namespace fuzzypref
