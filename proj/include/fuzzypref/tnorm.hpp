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

#include <algorithm>
#include <array>
#include <concepts>
#include <string>
#include <string_view>
#include <utility>

#include "fuzzypref/degree.hpp"

namespace fuzzypref {

enum class TNormId { godel, lukasiewicz, product };

inline constexpr std::array<TNormId, 3> kAllTNorms = {
    TNormId::godel, TNormId::lukasiewicz, TNormId::product};

/// A left-continuous t-norm together with its residuum.
///
/// Anything modelling this concept can be handed to the templated kernels
/// (compose, path checks). The negation is always derived as a -> 0.
/// User-supplied types should pass check_residuated_laws() in oracle.hpp
/// before being trusted.
template <class T>
concept ResiduatedTNorm = requires(double a, double b) {
  { T::conjoin(a, b) } -> std::convertible_to<double>;
  { T::residuum(a, b) } -> std::convertible_to<double>;
};

/// min(a, b); residuum is 1 if a <= b, else b.
struct Godel {
  static constexpr TNormId id = TNormId::godel;
  static constexpr double conjoin(double a, double b) noexcept {
    return a < b ? a : b;
  }
  static constexpr double residuum(double a, double b) noexcept {
    return a <= b ? 1.0 : b;
  }
};

/// max(0, a + b - 1); residuum min(1, 1 - a + b).
struct Lukasiewicz {
  static constexpr TNormId id = TNormId::lukasiewicz;
  static constexpr double conjoin(double a, double b) noexcept {
    const double s = a + b - 1.0;
    return s > 0.0 ? s : 0.0;
  }
  static constexpr double residuum(double a, double b) noexcept {
    const double s = 1.0 - a + b;
    return s < 1.0 ? s : 1.0;
  }
};

/// a * b; residuum 1 if a <= b, else b / a (a > b >= 0 so a > 0).
struct Product {
  static constexpr TNormId id = TNormId::product;
  static constexpr double conjoin(double a, double b) noexcept { return a * b; }
  static constexpr double residuum(double a, double b) noexcept {
    return a <= b ? 1.0 : b / a;
  }
};

static_assert(ResiduatedTNorm<Godel>);
static_assert(ResiduatedTNorm<Lukasiewicz>);
static_assert(ResiduatedTNorm<Product>);

template <ResiduatedTNorm T>
constexpr double negation_of(double a) noexcept {
  return T::residuum(a, 0.0);
}

/// Calls f(Godel{}) / f(Lukasiewicz{}) / f(Product{}) for the given id so the
/// callee is instantiated with an inlinable t-norm.
template <class F>
decltype(auto) visit_tnorm(TNormId t, F&& f) {
  switch (t) {
    case TNormId::lukasiewicz:
      return std::forward<F>(f)(Lukasiewicz{});
    case TNormId::product:
      return std::forward<F>(f)(Product{});
    case TNormId::godel:
    default:
      return std::forward<F>(f)(Godel{});
  }
}

inline double conjoin(TNormId t, double a, double b) {
  return visit_tnorm(t, [&](auto n) { return decltype(n)::conjoin(a, b); });
}
inline double residuum(TNormId t, double a, double b) {
  return visit_tnorm(t, [&](auto n) { return decltype(n)::residuum(a, b); });
}
inline double negation(TNormId t, double a) { return residuum(t, a, 0.0); }

inline Degree conjoin(TNormId t, Degree a, Degree b) {
  return Degree(conjoin(t, a.value(), b.value()));
}
inline Degree residuum(TNormId t, Degree a, Degree b) {
  return Degree(residuum(t, a.value(), b.value()));
}
inline Degree negation(TNormId t, Degree a) {
  return Degree(negation(t, a.value()));
}

/// "godel", "lukasiewicz", "product".
std::string_view to_string(TNormId t) noexcept;

/// Inverse of to_string; throws ParseError on anything else.
TNormId parse_tnorm(std::string_view name);

}  // namespace fuzzypref
