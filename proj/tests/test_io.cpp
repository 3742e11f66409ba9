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

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fuzzypref/io.hpp"
#include "support.hpp"

using namespace fuzzypref;
using namespace fuzzypref::testing;

TEST_CASE("JSON input") {
  const RelationDocument d = parse_relation_json(
      R"({"universe": ["x", "y"], "tnorm": "product", "matrix": [[1, 0.5], [0, 1]]})");
  CHECK(d.relation == rel({"x", "y"}, {{1, 0.5}, {0, 1}}));
  REQUIRE(d.tnorm);
  CHECK(*d.tnorm == TNormId::product);

  const RelationDocument e = parse_relation_json(R"({"universe":["a"],"matrix":[[0.25]]})");
  CHECK_FALSE(e.tnorm);
  CHECK(e.relation(0, 0) == 0.25);
}

TEST_CASE("JSON errors") {
  CHECK_THROWS_AS(parse_relation_json("{"), ParseError);
  CHECK_THROWS_AS(parse_relation_json("[1,2]"), ParseError);
  CHECK_THROWS_WITH_AS(parse_relation_json(R"({"matrix": [[1]]})"),
                       doctest::Contains("universe"), ParseError);
  CHECK_THROWS_WITH_AS(parse_relation_json(R"({"universe": ["a"]})"),
                       doctest::Contains("matrix"), ParseError);
  CHECK_THROWS_AS(parse_relation_json(R"({"universe": ["a"], "matrix": [["x"]]})"), ParseError);
  CHECK_THROWS_AS(parse_relation_json(R"({"universe": ["a"], "matrix": [[1]], "tnorm": "min"})"),
                  ParseError);
  CHECK_THROWS_AS(parse_relation_json(R"({"universe": ["a","b"], "matrix": [[1,0]]})"),
                  DimensionError);
  CHECK_THROWS_AS(parse_relation_json(R"({"universe": ["a"], "matrix": [[1.5]]})"), RangeError);
  CHECK_THROWS_AS(parse_relation_json(R"({"universe": ["a","a"], "matrix": [[1,0],[0,1]]})"),
                  Error);
}

TEST_CASE("CSV input") {
  const RelationDocument d = parse_relation_csv("x, y\n1, 0.5\n0.25,1\n\n");
  CHECK(d.relation == rel({"x", "y"}, {{1, 0.5}, {0.25, 1}}));
  CHECK_FALSE(d.tnorm);
  CHECK_THROWS_AS(parse_relation_csv(""), ParseError);
  CHECK_THROWS_WITH_AS(parse_relation_csv("x,y\n1,abc\n0,1\n"), doctest::Contains("line 2"),
                       ParseError);
  CHECK_THROWS_AS(parse_relation_csv("x,y\n1,0\n"), DimensionError);
}

TEST_CASE("output keeps 17 significant digits") {
  const FuzzyRelation r = triple_r();
  const std::string s = dump_json(relation_to_json(r, TNormId::godel));
  CHECK(s.find("0.33333333333333331") != std::string::npos);
  CHECK(s.find("\"tnorm\":\"godel\"") != std::string::npos);
  CHECK(relation_to_csv(r).find("0.33333333333333331") != std::string::npos);

  CHECK(format_degree(0.5) == "0.5");
  CHECK(format_degree(1.0) == "1");
  CHECK(format_degree(1.0 / 3) == "0.3333333333333333");
}

TEST_CASE("indented JSON keeps matrix rows flat") {
  const std::string s = dump_json(relation_to_json(rel({"a", "b"}, {{1, 0}, {0.5, 1}})), 2);
  CHECK(s.find("[1, 0]") != std::string::npos);
  CHECK(s.find("[0.5, 1]") != std::string::npos);
  CHECK(s.find("\n  \"matrix\": [\n") != std::string::npos);
}

TEST_CASE("JSON and CSV round-trip exactly") {
  Rng rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    const FuzzyRelation r = random_relation(rng, rng.between(1, 6));
    const TNormId t = kAllTNorms[rng.index(3)];
    for (int indent : {-1, 2}) {
      const RelationDocument back = parse_relation_json(dump_json(relation_to_json(r, t), indent));
      CHECK(back.relation == r);
      CHECK(back.tnorm == t);
    }
    CHECK(parse_relation_csv(relation_to_csv(r)).relation == r);
  }
}

TEST_CASE("load_relation dispatches on the extension") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto json = dir / "fuzzypref_io_test.json";
  const auto csv = dir / "fuzzypref_io_test.csv";
  std::ofstream(json) << dump_json(relation_to_json(pair_r(), TNormId::lukasiewicz));
  std::ofstream(csv) << relation_to_csv(pair_r());
  CHECK(load_relation(json).relation == pair_r());
  CHECK(load_relation(json).tnorm == TNormId::lukasiewicz);
  CHECK(load_relation(csv).relation == pair_r());
  std::filesystem::remove(json);
  std::filesystem::remove(csv);
  CHECK_THROWS_AS(load_relation(dir / "fuzzypref_no_such_file.json"), ParseError);
}

TEST_CASE("extension report JSON") {
  const ExtensionReport rep =
      totalize(crisp(3, {{"a", "b"}}), TNormId::godel, RelationClass::strict_partial_order);
  const Json j = to_json(rep, TNormId::godel, RelationClass::strict_partial_order);
  CHECK(j["class"] == "r1");
  CHECK(j["inserted_arcs"] == Json::parse(R"([["a","c"],["b","c"]])"));
  CHECK(j["verified_total"] == true);
  CHECK(relation_from_json(j["result"]).relation == rep.result);
}

TEST_CASE("table output") {
  const std::string t = format_table(pair_r());
  CHECK(t.find('x') != std::string::npos);
  CHECK(t.find("0.5") != std::string::npos);
  CHECK(t.find("0.3333333333333333") != std::string::npos);
}
