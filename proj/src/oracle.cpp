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

#include "fuzzypref/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fuzzypref {

namespace {

Universe grid_universe(std::size_t n) {
  if (n < 2 || n > 3) {
    throw PreconditionError("grid universe size must be 2 or 3, got " + std::to_string(n));
  }
  return Universe::of_size(n);
}

}  // namespace

RelationGrid::RelationGrid(GridSpec spec)
    : spec_(std::move(spec)), universe_(grid_universe(spec_.universe_size)) {
  if (spec_.values.empty()) throw PreconditionError("grid needs at least one value");
  for (std::size_t i = 0; i < spec_.values.size(); ++i) {
    if (!is_valid_degree(spec_.values[i])) {
      throw RangeError("grid value " + std::to_string(spec_.values[i]) + " is outside [0,1]");
    }
    if (i > 0 && !(spec_.values[i - 1] < spec_.values[i])) {
      throw PreconditionError("grid values must be strictly ascending");
    }
  }
  const std::size_t cells = spec_.universe_size * spec_.universe_size;
  const auto base = static_cast<std::uint64_t>(spec_.values.size());
  count_ = 1;
  for (std::size_t k = 0; k < cells; ++k) {
    if (count_ > spec_.cap / base) {
      throw CapExceeded(std::to_string(base) + "^" + std::to_string(cells) +
                        " grid relations exceed the cap of " + std::to_string(spec_.cap));
    }
    count_ *= base;
  }
  if (count_ > spec_.cap) {
    throw CapExceeded("grid enumeration exceeds the cap of " + std::to_string(spec_.cap));
  }
}

FuzzyRelation RelationGrid::at(std::uint64_t index) const {
  const std::size_t cells = spec_.universe_size * spec_.universe_size;
  const auto base = static_cast<std::uint64_t>(spec_.values.size());
  std::vector<double> data(cells);
  for (std::size_t k = cells; k-- > 0;) {
    data[k] = spec_.values[static_cast<std::size_t>(index % base)];
    index /= base;
  }
  return FuzzyRelation(universe_, std::move(data));
}

void RelationGrid::for_each(
    const std::function<void(std::uint64_t, const FuzzyRelation&)>& f) const {
  for (std::uint64_t i = 0; i < count_; ++i) f(i, at(i));
}

namespace {

Json grid_json(const GridSpec& g) {
  Json j;
  if (g.universe_size > 0) j["universe_size"] = g.universe_size;
  j["values"] = g.values;
  return j;
}

// Collects violations from a sweep. With OpenMP the first counterexample is
// the smallest failing index, independent of scheduling.
class Tally {
 public:
  void record(std::uint64_t index, const std::function<Json()>& describe) {
#pragma omp critical(fuzzypref_oracle_tally)
    {
      ++violations_;
      if (index < first_index_) {
        first_index_ = index;
        first_ = describe();
      }
    }
  }
  void fill(OracleReport& r) const {
    r.violations = violations_;
    if (violations_ > 0) {
      Json cx = first_;
      cx["index"] = first_index_;
      r.first_counterexample = std::move(cx);
    }
  }

 private:
  std::uint64_t violations_ = 0;
  std::uint64_t first_index_ = std::numeric_limits<std::uint64_t>::max();
  Json first_;
};

template <class Body>
void sweep(std::uint64_t count, Execution exec, Body body) {
  const auto total = static_cast<long long>(count);
  if (use_parallel(exec, kParallelThreshold)) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < total; ++i) body(static_cast<std::uint64_t>(i));
  } else {
    for (long long i = 0; i < total; ++i) body(static_cast<std::uint64_t>(i));
  }
}

// Gödel closure by Floyd-Warshall over (max, min); a different route from
// the repeated squaring in closure.cpp. Valid because min is idempotent.
std::vector<double> godel_closure_fw(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  std::vector<double> t(r.data().begin(), r.data().end());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i * n + j] = std::max(t[i * n + j], std::min(t[i * n + k], t[k * n + j]));
      }
    }
  }
  return t;
}

bool godel_consistent_independent(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  const std::vector<double> t = godel_closure_fw(r);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const double bound = r(x, y) <= r(y, x) ? 1.0 : r(y, x);
      if (t[y * n + x] > bound + kEpsilon) return false;
    }
  }
  return true;
}

bool below(std::span<const double> a, std::span<const double> b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k] + kEpsilon) return false;
  }
  return true;
}

Json relation_cx(const FuzzyRelation& r) { return relation_to_json(r); }

}  // namespace

Json to_json(const OracleReport& r) {
  Json j;
  j["property"] = r.property;
  j["grid"] = r.grid ? grid_json(*r.grid) : Json(nullptr);
  j["tnorm"] = r.tnorm ? Json(std::string(to_string(*r.tnorm))) : Json(nullptr);
  if (r.relation_class) j["class"] = std::string(to_string(*r.relation_class));
  j["instances_checked"] = r.instances_checked;
  if (r.instances_skipped) j["instances_skipped"] = r.instances_skipped;
  j["violations"] = r.violations;
  if (r.first_counterexample) j["first_counterexample"] = *r.first_counterexample;
  return j;
}

OracleReport verify_least_consistent_closure(const GridSpec& g, Execution exec) {
  const RelationGrid grid(g);
  const std::uint64_t count = grid.count();

  std::vector<std::vector<double>> data(count);
  std::vector<char> consistent(count);
  sweep(count, exec, [&](std::uint64_t i) {
    const FuzzyRelation r = grid.at(i);
    data[i].assign(r.data().begin(), r.data().end());
    consistent[i] = godel_consistent_independent(r) ? 1 : 0;
  });

  Tally tally;
  sweep(count, exec, [&](std::uint64_t i) {
    const FuzzyRelation r = grid.at(i);
    const FuzzyRelation c =
        consistent_closure(r, TNormId::godel, ClosureVariant::godel_star, Execution::serial);
    const auto fail = [&](const char* why, std::optional<std::uint64_t> q) {
      tally.record(i, [&] {
        Json cx;
        cx["reason"] = why;
        cx["relation"] = relation_cx(r);
        cx["closure"] = relation_cx(c);
        if (q) cx["witness"] = relation_cx(grid.at(*q));
        return cx;
      });
    };
    if (!below(r.data(), c.data())) return fail("closure does not contain R", std::nullopt);
    if (!godel_consistent_independent(c)) return fail("closure is not consistent", std::nullopt);
    if (consistent[i] && !below(c.data(), r.data())) {
      return fail("closure of a consistent relation differs from it", std::nullopt);
    }
    for (std::uint64_t q = 0; q < count; ++q) {
      if (!consistent[q] || !below(data[i], data[q])) continue;
      if (!below(c.data(), data[q])) {
        return fail("a smaller consistent relation contains R", q);
      }
    }
  });

  OracleReport report;
  report.property = "least-closure";
  report.grid = g;
  report.tnorm = TNormId::godel;
  report.instances_checked = count;
  tally.fill(report);
  return report;
}

namespace {

// Crisp relations on a 3-element universe as 9-bit masks, bit 3*i + j.
namespace crisp3 {

constexpr unsigned kN = 3;
constexpr unsigned kAll = (1u << (kN * kN)) - 1;

constexpr unsigned bit(unsigned i, unsigned j) { return 1u << (kN * i + j); }
constexpr bool has(unsigned m, unsigned i, unsigned j) { return (m & bit(i, j)) != 0; }

unsigned closure(unsigned m) {
  for (unsigned k = 0; k < kN; ++k) {
    for (unsigned i = 0; i < kN; ++i) {
      for (unsigned j = 0; j < kN; ++j) {
        if (has(m, i, k) && has(m, k, j)) m |= bit(i, j);
      }
    }
  }
  return m;
}

unsigned asymmetric(unsigned m) {
  unsigned p = 0;
  for (unsigned i = 0; i < kN; ++i) {
    for (unsigned j = 0; j < kN; ++j) {
      if (has(m, i, j) && !has(m, j, i)) p |= bit(i, j);
    }
  }
  return p;
}

bool subset(unsigned a, unsigned b) { return (a & ~b) == 0; }

// Classical notion: R ⊆ Q and P_R ⊆ P_Q.
bool compatible(unsigned r, unsigned q) {
  return subset(r, q) && subset(asymmetric(r), asymmetric(q));
}

bool consistent(unsigned r) { return compatible(r, closure(r)); }
bool transitive(unsigned m) { return closure(m) == m; }

bool total(unsigned m) {
  for (unsigned i = 0; i < kN; ++i) {
    for (unsigned j = i + 1; j < kN; ++j) {
      if (!has(m, i, j) && !has(m, j, i)) return false;
    }
  }
  return true;
}

bool in_class(unsigned m, RelationClass c) {
  const unsigned diag = bit(0, 0) | bit(1, 1) | bit(2, 2);
  switch (c) {
    case RelationClass::strict_partial_order:
      return (m & diag) == 0 && transitive(m);
    case RelationClass::preorder:
      return (m & diag) == diag && transitive(m);
    case RelationClass::transitive:
      return transitive(m);
    case RelationClass::unrestricted:
      return true;
  }
  return false;
}

FuzzyRelation to_relation(unsigned m) {
  std::vector<double> data(kN * kN);
  for (unsigned k = 0; k < kN * kN; ++k) data[k] = (m >> k) & 1u ? 1.0 : 0.0;
  return FuzzyRelation(Universe::of_size(kN), std::move(data));
}

}  // namespace crisp3

}  // namespace

OracleReport verify_crisp_duggan_intersection(RelationClass c, Execution exec) {
  using namespace crisp3;
  std::vector<unsigned> candidates;
  for (unsigned q = 0; q <= kAll; ++q) {
    if (total(q) && transitive(q) && in_class(q, c)) candidates.push_back(q);
  }

  std::vector<char> eligible(kAll + 1);
  for (unsigned r = 0; r <= kAll; ++r) {
    eligible[r] = consistent(r) && in_class(closure(r), c) ? 1 : 0;
  }

  Tally tally;
  sweep(kAll + 1, exec, [&](std::uint64_t i) {
    const auto r = static_cast<unsigned>(i);
    if (!eligible[r]) return;
    unsigned meet = kAll;
    std::uint64_t found = 0;
    for (unsigned q : candidates) {
      if (compatible(r, q)) {
        meet &= q;
        ++found;
      }
    }
    const unsigned tr = closure(r);
    if (found == 0 || meet != tr) {
      tally.record(i, [&] {
        Json cx;
        cx["relation"] = relation_to_json(to_relation(r));
        cx["transitive_closure"] = relation_to_json(to_relation(tr));
        cx["intersection"] = relation_to_json(to_relation(meet));
        cx["extensions_found"] = found;
        return cx;
      });
    }
  });

  OracleReport report;
  report.property = "duggan-crisp";
  report.relation_class = c;
  report.grid = GridSpec{kN, {0.0, 1.0}};
  const auto checked =
      static_cast<std::uint64_t>(std::count(eligible.begin(), eligible.end(), 1));
  report.instances_checked = checked;
  report.instances_skipped = (kAll + 1) - checked;
  tally.fill(report);
  return report;
}

OracleReport verify_consistency_equivalence(const GridSpec& g, TNormId t, Execution exec) {
  const RelationGrid grid(g);
  Tally tally;
  sweep(grid.count(), exec, [&](std::uint64_t i) {
    const FuzzyRelation r = grid.at(i);
    const bool closure_form = check_star_consistent(r, t, Execution::serial).holds;
    const bool path_form = is_consistent_path_condition(r, t);
    if (closure_form != path_form) {
      tally.record(i, [&] {
        Json cx;
        cx["relation"] = relation_to_json(r, t);
        cx["closure_form"] = closure_form;
        cx["path_form"] = path_form;
        return cx;
      });
    }
  });

  OracleReport report;
  report.property = "consistency-equiv";
  report.grid = g;
  report.tnorm = t;
  report.instances_checked = grid.count();
  tally.fill(report);
  return report;
}

namespace detail {

std::vector<double> unit_grid(double step) {
  if (!(step > 0.0) || step > 1.0) {
    throw PreconditionError("grid step must be in (0, 1]");
  }
  const double k = std::round(1.0 / step);
  if (std::abs(k * step - 1.0) > 1e-12) {
    throw PreconditionError("grid step " + std::to_string(step) + " does not divide 1");
  }
  const auto steps = static_cast<std::size_t>(k);
  std::vector<double> grid(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) grid[i] = static_cast<double>(i) / k;
  return grid;
}

}  // namespace detail

OracleReport verify_adjunction_grid(TNormId t, double step) {
  auto [checked, fails] =
      visit_tnorm(t, [&](auto tn) { return check_residuated_laws<decltype(tn)>(step); });
  OracleReport report;
  report.property = "adjunction";
  report.tnorm = t;
  report.grid = GridSpec{0, detail::unit_grid(step)};  // scalar grid, no universe
  report.instances_checked = checked;
  report.violations = fails.size();
  if (!fails.empty()) {
    Json cx;
    cx["law"] = fails.front().law;
    cx["a"] = fails.front().a;
    cx["b"] = fails.front().b;
    cx["c"] = fails.front().c;
    report.first_counterexample = std::move(cx);
  }
  return report;
}

}  // namespace fuzzypref
