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

#include "fuzzypref/extension.hpp"

#include <charconv>
#include <random>

namespace fuzzypref {

namespace {

std::string num(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void require_same_universe(const FuzzyRelation& r, const FuzzyRelation& q) {
  if (!r.same_universe(q)) {
    throw UniverseMismatch("relations are defined over different universes");
  }
}

std::optional<Violation> first_inclusion_violation(const FuzzyRelation& r,
                                                   const FuzzyRelation& q) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!approx_le(r(i, j), q(i, j))) {
        return Violation{Violation::Kind::inclusion, i, j, r(i, j), q(i, j)};
      }
    }
  }
  return std::nullopt;
}

// Q(b,a) <= R(a,b) -> R(b,a), scanning Q row-major over (b,a).
template <ResiduatedTNorm T>
std::optional<Violation> first_residuum_violation(const FuzzyRelation& r,
                                                  const FuzzyRelation& q) {
  const std::size_t n = r.size();
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      const double bound = T::residuum(r(a, b), r(b, a));
      if (!approx_le(q(b, a), bound)) {
        return Violation{Violation::Kind::residuum, b, a, q(b, a), bound};
      }
    }
  }
  return std::nullopt;
}

Verdict fail(Violation v) { return Verdict{false, v}; }

}  // namespace

std::string_view to_string(Violation::Kind k) noexcept {
  switch (k) {
    case Violation::Kind::inclusion:
      return "inclusion";
    case Violation::Kind::residuum:
      return "residuum";
    case Violation::Kind::asymmetric:
      return "asymmetric";
  }
  return "inclusion";
}

std::string describe(const Violation& v, const Universe& u) {
  const std::string& a = u.label(v.row);
  const std::string& b = u.label(v.col);
  switch (v.kind) {
    case Violation::Kind::inclusion:
      return "R(" + a + "," + b + ") = " + num(v.value) + " > Q(" + a + "," + b +
             ") = " + num(v.bound);
    case Violation::Kind::residuum:
      return "Q(" + a + "," + b + ") = " + num(v.value) + " > R(" + b + "," + a +
             ") -> R(" + a + "," + b + ") = " + num(v.bound);
    case Violation::Kind::asymmetric:
      return "P_R(" + a + "," + b + ") = " + num(v.value) + " > P_Q(" + a + "," + b +
             ") = " + num(v.bound);
  }
  return {};
}

bool is_extension(const FuzzyRelation& r, const FuzzyRelation& q) {
  return is_included(r, q);
}

Verdict check_star_compatible_extension(const FuzzyRelation& r, const FuzzyRelation& q,
                                        TNormId t) {
  require_same_universe(r, q);
  if (auto v = first_inclusion_violation(r, q)) return fail(*v);
  auto v = visit_tnorm(t, [&](auto tn) {
    return first_residuum_violation<decltype(tn)>(r, q);
  });
  if (v) return fail(*v);
  return {};
}

Verdict check_compatible_extension_asym(const FuzzyRelation& r, const FuzzyRelation& q,
                                        TNormId t) {
  require_same_universe(r, q);
  if (auto v = first_inclusion_violation(r, q)) return fail(*v);
  const FuzzyRelation pr = asymmetric_part(r, t);
  const FuzzyRelation pq = asymmetric_part(q, t);
  if (auto v = first_inclusion_violation(pr, pq)) {
    v->kind = Violation::Kind::asymmetric;
    return fail(*v);
  }
  return {};
}

Verdict check_star_consistent(const FuzzyRelation& r, TNormId t, Execution exec) {
  const FuzzyRelation tr = transitive_closure(r, t, exec);
  auto v = visit_tnorm(t, [&](auto tn) {
    return first_residuum_violation<decltype(tn)>(r, tr);
  });
  if (v) return fail(*v);
  return {};
}

namespace {

template <ResiduatedTNorm T>
class PathChecker {
 public:
  explicit PathChecker(const FuzzyRelation& r) : r_(r), n_(r.size()), used_(n_, false) {}

  bool holds() {
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        if (x == y) continue;  // bound is a -> a = 1
        target_ = x;
        bound_ = T::residuum(r_(x, y), r_(y, x));
        if (!extend(y, 1.0, 0)) return false;
      }
    }
    return true;
  }

 private:
  // `value` is the t-norm product along y -> ... -> cur; `depth`
  // intermediates have been placed so far.
  bool extend(std::size_t cur, double value, std::size_t depth) {
    if (depth == n_) return true;
    for (std::size_t t = 0; t < n_; ++t) {
      if (used_[t]) continue;
      const double v = T::conjoin(value, r_(cur, t));
      if (!approx_le(T::conjoin(v, r_(t, target_)), bound_)) return false;
      used_[t] = true;
      const bool ok = extend(t, v, depth + 1);
      used_[t] = false;
      if (!ok) return false;
    }
    return true;
  }

  const FuzzyRelation& r_;
  std::size_t n_;
  std::vector<bool> used_;
  std::size_t target_ = 0;
  double bound_ = 1.0;
};

}  // namespace

bool is_consistent_path_condition(const FuzzyRelation& r, TNormId t, std::size_t max_size) {
  if (r.size() > max_size) {
    throw CapExceeded("path enumeration limited to universes of size " +
                      std::to_string(max_size) + ", got " + std::to_string(r.size()));
  }
  return visit_tnorm(t, [&](auto tn) { return PathChecker<decltype(tn)>(r).holds(); });
}

std::string_view to_string(RelationClass c) noexcept {
  switch (c) {
    case RelationClass::strict_partial_order:
      return "r1";
    case RelationClass::preorder:
      return "r2";
    case RelationClass::transitive:
      return "r3";
    case RelationClass::unrestricted:
      return "any";
  }
  return "any";
}

RelationClass parse_relation_class(std::string_view name) {
  if (name == "r1") return RelationClass::strict_partial_order;
  if (name == "r2") return RelationClass::preorder;
  if (name == "r3") return RelationClass::transitive;
  if (name == "any") return RelationClass::unrestricted;
  throw ParseError("unknown relation class '" + std::string(name) +
                   "' (expected r1, r2, r3 or any)");
}

bool is_class_member(const FuzzyRelation& r, RelationClass c, TNormId t) {
  switch (c) {
    case RelationClass::strict_partial_order:
      return is_irreflexive(r) && is_transitive(r, t);
    case RelationClass::preorder:
      return is_reflexive(r) && is_transitive(r, t);
    case RelationClass::transitive:
      return is_transitive(r, t);
    case RelationClass::unrestricted:
      return true;
  }
  return false;
}

namespace {

struct Pair {
  std::size_t x;
  std::size_t y;
};

std::vector<Pair> doubly_zero_pairs(const FuzzyRelation& q) {
  std::vector<Pair> out;
  const std::size_t n = q.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && approx_zero(q(x, y)) && approx_zero(q(y, x))) out.push_back({x, y});
    }
  }
  return out;
}

}  // namespace

ExtensionReport totalize(const FuzzyRelation& r, TNormId t, RelationClass c,
                         const TotalizeOptions& options) {
  if (!is_transitive(r, t)) {
    throw PreconditionError("totalize requires a " + std::string(to_string(t)) +
                            "-transitive relation");
  }
  if (!is_class_member(r, c, t)) {
    throw PreconditionError("input relation is not a member of class " +
                            std::string(to_string(c)));
  }

  const std::size_t n = r.size();
  const std::size_t max_steps = n * n;
  std::mt19937_64 rng(options.seed);

  ExtensionReport report{r, {}, 0};
  FuzzyRelation q = r;
  bool converged = true;
  for (;;) {
    const std::vector<Pair> candidates = doubly_zero_pairs(q);
    if (candidates.empty()) break;
    if (static_cast<std::size_t>(report.iterations) >= max_steps) {
      converged = false;
      break;
    }
    Pair p = candidates.front();
    if (options.order == ArcOrder::seeded_random) {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      p = candidates[pick(rng)];
    }
    ClosureResult step = transitive_closure_report(insert_arc(q, p.x, p.y), t, options.exec);
    converged = converged && step.converged;
    q = std::move(step.relation);
    report.inserted_arcs.emplace_back(q.universe().label(p.x), q.universe().label(p.y));
    ++report.iterations;
  }

  report.verified_total = is_total(q);
  report.verified_transitive = is_transitive(q, t);
  report.verified_star_compatible = is_star_compatible_extension(r, q, t);
  report.verified_class_member = is_class_member(q, c, t);
  report.converged = converged;
  report.result = std::move(q);
  return report;
}

ConsistentExtension extend_consistent(const FuzzyRelation& r, TNormId t,
                                      const TotalizeOptions& options) {
  ConsistentExtension out;
  out.consistent = check_star_consistent(r, t, options.exec).holds;
  if (!out.consistent) return out;
  out.report = totalize(transitive_closure(r, t, options.exec), t, RelationClass::transitive,
                        options);
  out.compatible_with_original = is_star_compatible_extension(r, out.report->result, t);
  return out;
}

}  // namespace fuzzypref
