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

// Relation file formats.
//
// JSON: {"universe": ["x","y"], "tnorm": "godel", "matrix": [[1,0.5],[0,1]]}
//       ("tnorm" optional on input).
// CSV:  first line is the label list, then one matrix row per line.
//
// Degrees are written with 17 significant digits so doubles round-trip.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fuzzypref/extension.hpp"
#include "fuzzypref/relation.hpp"

namespace fuzzypref {

using Json = nlohmann::ordered_json;

struct RelationDocument {
  FuzzyRelation relation;
  std::optional<TNormId> tnorm;
};

RelationDocument parse_relation_json(std::string_view text);
RelationDocument relation_from_json(const Json& doc);
RelationDocument parse_relation_csv(std::string_view text);

/// Dispatches on extension: ".csv" is CSV, anything else JSON.
RelationDocument load_relation(const std::filesystem::path& path);

Json relation_to_json(const FuzzyRelation& r, std::optional<TNormId> t = std::nullopt);
std::string relation_to_csv(const FuzzyRelation& r);

/// {"tnorm", "class", "result": relation, "inserted_arcs": [[x,y],...],
///  "iterations", "verified_total", "verified_transitive",
///  "verified_star_compatible", "verified_class_member", "converged"}
Json to_json(const ExtensionReport& report, TNormId t, RelationClass c);

/// Serializes with floats as %.17g. indent < 0 gives a single line.
std::string dump_json(const Json& j, int indent = -1);

/// Shortest decimal that reads back to the same double ("0.5", "1").
std::string format_degree(double v);

/// Aligned matrix with row and column labels.
std::string format_table(const FuzzyRelation& r);

}  // namespace fuzzypref
