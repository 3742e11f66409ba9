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

#include <cmath>
#include <compare>
#include <string>

#include "fuzzypref/error.hpp"

namespace fuzzypref {

/// Absolute tolerance for every <= / = / > 0 predicate on degrees.
inline constexpr double kEpsilon = 1e-9;

/// A truth degree in [0,1].
///
/// Construction rejects values outside the unit interval, including NaN.
/// Arithmetic is done on the raw double (see tnorm.hpp); Degree only
/// guards the boundary.
class Degree {
 public:
  constexpr Degree() noexcept = default;

  explicit Degree(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw RangeError("degree out of [0,1]: " + std::to_string(value));
    }
  }

  static constexpr Degree zero() noexcept { return Degree(0.0, Unchecked{}); }
  static constexpr Degree one() noexcept { return Degree(1.0, Unchecked{}); }

  constexpr double value() const noexcept { return value_; }
  constexpr explicit operator double() const noexcept { return value_; }

  /// Exact comparison of the stored doubles. Use approx_* for predicates.
  friend constexpr auto operator<=>(Degree, Degree) = default;

 private:
  struct Unchecked {};
  constexpr Degree(double v, Unchecked) noexcept : value_(v) {}

  double value_ = 0.0;
};

inline bool is_valid_degree(double v) noexcept { return v >= 0.0 && v <= 1.0; }

constexpr bool approx_le(double a, double b, double eps = kEpsilon) noexcept {
  return a <= b + eps;
}
constexpr bool approx_eq(double a, double b, double eps = kEpsilon) noexcept {
  return (a > b ? a - b : b - a) <= eps;
}
constexpr bool approx_positive(double a, double eps = kEpsilon) noexcept {
  return a > eps;
}
constexpr bool approx_zero(double a, double eps = kEpsilon) noexcept {
  return a <= eps;
}

}  // namespace fuzzypref
