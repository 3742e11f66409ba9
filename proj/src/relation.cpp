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

#include "fuzzypref/relation.hpp"

#include <algorithm>
#include <unordered_set>

namespace fuzzypref {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw DimensionError("universe must contain at least one label");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw Error("duplicate label '" + l + "' in universe");
  }
}

Universe Universe::of_size(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                            : "x" + std::to_string(i));
  }
  return Universe(std::move(labels));
}

std::size_t Universe::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UnknownLabel(std::string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

FuzzyRelation::FuzzyRelation(Universe universe, std::vector<double> row_major)
    : universe_(std::make_shared<const Universe>(std::move(universe))),
      data_(std::move(row_major)) {
  const std::size_t n = universe_->size();
  if (data_.size() != n * n) {
    throw DimensionError("matrix has " + std::to_string(data_.size()) +
                         " entries, universe of size " + std::to_string(n) +
                         " needs " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = data_[i * n + j];
      if (!is_valid_degree(v)) {
        throw RangeError("entry (" + universe_->label(i) + ", " + universe_->label(j) +
                         ") = " + std::to_string(v) + " is outside [0,1]");
      }
    }
  }
}

FuzzyRelation FuzzyRelation::from_rows(Universe universe,
                                       const std::vector<std::vector<double>>& rows) {
  const std::size_t n = universe.size();
  if (rows.size() != n) {
    throw DimensionError("matrix has " + std::to_string(rows.size()) +
                         " rows, universe has " + std::to_string(n) + " labels");
  }
  std::vector<double> data;
  data.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw DimensionError("row '" + universe.label(i) + "' has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(n));
    }
    data.insert(data.end(), rows[i].begin(), rows[i].end());
  }
  return FuzzyRelation(std::move(universe), std::move(data));
}

FuzzyRelation FuzzyRelation::zeros(Universe universe) {
  const std::size_t n = universe.size();
  return FuzzyRelation(std::move(universe), std::vector<double>(n * n, 0.0));
}

FuzzyRelation FuzzyRelation::identity(Universe universe) {
  const std::size_t n = universe.size();
  std::vector<double> data(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) data[i * n + i] = 1.0;
  return FuzzyRelation(std::move(universe), std::move(data));
}

FuzzyRelation FuzzyRelation::from_crisp(
    Universe universe, std::span<const std::pair<std::string, std::string>> pairs) {
  const std::size_t n = universe.size();
  std::vector<double> data(n * n, 0.0);
  for (const auto& [x, y] : pairs) {
    data[universe.index_of(x) * n + universe.index_of(y)] = 1.0;
  }
  return FuzzyRelation(std::move(universe), std::move(data));
}

double FuzzyRelation::at(std::string_view x, std::string_view y) const {
  return (*this)(universe_->index_of(x), universe_->index_of(y));
}

std::vector<std::vector<double>> FuzzyRelation::rows() const {
  const std::size_t n = size();
  std::vector<std::vector<double>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * n),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  }
  return out;
}

FuzzyRelation with_data(const FuzzyRelation& like, std::vector<double> data) {
  return FuzzyRelation(like.universe_, std::move(data), FuzzyRelation::Trusted{});
}

namespace {

void require_same_universe(const FuzzyRelation& r, const FuzzyRelation& q) {
  if (!r.same_universe(q)) {
    throw UniverseMismatch("relations are defined over different universes");
  }
}

template <class Op>
FuzzyRelation pointwise(const FuzzyRelation& r, const FuzzyRelation& q, Op op) {
  require_same_universe(r, q);
  auto a = r.data();
  auto b = q.data();
  std::vector<double> out(a.size());
  std::transform(a.begin(), a.end(), b.begin(), out.begin(), op);
  return with_data(r, std::move(out));
}

}  // namespace

FuzzyRelation unite(const FuzzyRelation& r, const FuzzyRelation& q) {
  return pointwise(r, q, [](double a, double b) { return std::max(a, b); });
}

FuzzyRelation intersect(const FuzzyRelation& r, const FuzzyRelation& q) {
  return pointwise(r, q, [](double a, double b) { return std::min(a, b); });
}

bool is_included(const FuzzyRelation& r, const FuzzyRelation& q) {
  require_same_universe(r, q);
  auto a = r.data();
  auto b = q.data();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!approx_le(a[k], b[k])) return false;
  }
  return true;
}

bool approx_equal(const FuzzyRelation& r, const FuzzyRelation& q, double eps) {
  require_same_universe(r, q);
  auto a = r.data();
  auto b = q.data();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!approx_eq(a[k], b[k], eps)) return false;
  }
  return true;
}

FuzzyRelation converse(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = r(j, i);
  }
  return with_data(r, std::move(out));
}

FuzzyRelation asymmetric_part(const FuzzyRelation& r, TNormId t) {
  const std::size_t n = r.size();
  std::vector<double> out(n * n);
  visit_tnorm(t, [&](auto tn) {
    using T = decltype(tn);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out[i * n + j] = T::conjoin(r(i, j), negation_of<T>(r(j, i)));
      }
    }
  });
  return with_data(r, std::move(out));
}

bool is_reflexive(const FuzzyRelation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!approx_eq(r(i, i), 1.0)) return false;
  }
  return true;
}

bool is_irreflexive(const FuzzyRelation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!approx_zero(r(i, i))) return false;
  }
  return true;
}

bool is_transitive(const FuzzyRelation& r, TNormId t) {
  return visit_tnorm(t, [&](auto tn) { return is_transitive_with<decltype(tn)>(r); });
}

bool is_total(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!approx_positive(r(i, j)) && !approx_positive(r(j, i))) return false;
    }
  }
  return true;
}

bool is_strongly_total(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!approx_eq(r(i, j), 1.0) && !approx_eq(r(j, i), 1.0)) return false;
    }
  }
  return true;
}

bool is_crisp(const FuzzyRelation& r) {
  return std::all_of(r.data().begin(), r.data().end(),
                     [](double v) { return approx_zero(v) || approx_eq(v, 1.0); });
}

FuzzyRelation insert_arc(const FuzzyRelation& r, std::size_t x, std::size_t y) {
  const std::size_t n = r.size();
  if (x >= n || y >= n) throw UnknownLabel("#" + std::to_string(x >= n ? x : y));
  std::vector<double> out(r.data().begin(), r.data().end());
  out[x * n + y] = 1.0;
  return with_data(r, std::move(out));
}

FuzzyRelation insert_arc(const FuzzyRelation& r, std::string_view x, std::string_view y) {
  return insert_arc(r, r.universe().index_of(x), r.universe().index_of(y));
}

}  // namespace fuzzypref
