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
#include <sstream>

#include "fuzzypref/cli.hpp"
#include "fuzzypref/io.hpp"
#include "support.hpp"

using namespace fuzzypref;
using namespace fuzzypref::testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "fuzzypref");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& text)
      : path_(std::filesystem::temp_directory_path() / ("fuzzypref_cli_" + name)) {
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TempFile json_file(const std::string& name, const FuzzyRelation& r,
                   std::optional<TNormId> t = std::nullopt) {
  return TempFile(name + ".json", dump_json(relation_to_json(r, t)));
}

}  // namespace

TEST_CASE("closure command") {
  const TempFile f = json_file("triple", triple_r());
  const Outcome o = run({"--format", "json", "closure", f.str()});
  CHECK(o.code == 0);
  const RelationDocument d = parse_relation_json(o.out);
  CHECK(d.relation == rel({"x", "y", "z"}, {{1, 1, 1}, {0.5, 1, 0.5}, {0.5, 1, 1}}));
  CHECK(d.tnorm == TNormId::godel);

  const Outcome table = run({"closure", f.str()});
  CHECK(table.code == 0);
  CHECK(table.out.find("0.5") != std::string::npos);
}

TEST_CASE("cclosure command") {
  const TempFile f = json_file("triplec", triple_r());
  const Outcome o = run({"--format", "json", "cclosure", "--variant", "star", f.str()});
  CHECK(o.code == 0);
  CHECK(parse_relation_json(o.out).relation ==
        rel({"x", "y", "z"}, {{1, 1.0 / 3, 1}, {1.0 / 3, 1, 0.5}, {0.5, 1, 1}}));

  const Outcome bad = run({"--tnorm", "product", "cclosure", "--variant", "star", f.str()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("godel") != std::string::npos);

  const TempFile p = json_file("product_pair", product_pair_r(), TNormId::product);
  const Outcome nabla = run({"--format", "json", "cclosure", "--variant", "nabla", p.str()});
  CHECK(nabla.code == 0);
  const RelationDocument d = parse_relation_json(nabla.out);
  CHECK(d.tnorm == TNormId::product);
  CHECK(approx_equal(d.relation, rel({"x", "y"}, {{1, 1.0 / 6}, {0.25, 1}}), 1e-12));
}

TEST_CASE("compat command") {
  const TempFile r = json_file("pair_r", pair_r());
  const TempFile q = json_file("pair_q", pair_q());
  const Outcome star = run({"compat", r.str(), q.str()});
  CHECK(star.code == 1);
  CHECK(star.out.find("false") != std::string::npos);
  CHECK(star.out.find("Q(y,x)") != std::string::npos);

  const Outcome asym = run({"compat", "--sense", "asym", r.str(), q.str()});
  CHECK(asym.code == 0);

  const Outcome js = run({"--format", "json", "compat", r.str(), q.str()});
  CHECK(js.code == 1);
  const Json j = Json::parse(js.out);
  CHECK(j["verdict"] == false);
  CHECK(j["violation"]["pair"] == Json::parse(R"(["y","x"])"));
}

TEST_CASE("check command") {
  const TempFile cyc = json_file("cycle", crisp(3, {{"a", "b"}, {"b", "c"}, {"c", "a"}}));
  CHECK(run({"check", "--property", "consistent", cyc.str()}).code == 1);
  CHECK(run({"check", "--property", "irreflexive", cyc.str()}).code == 0);
  CHECK(run({"check", "--property", "transitive", cyc.str()}).code == 1);
  const TempFile e = json_file("pair", pair_r());
  for (const char* p : {"reflexive", "transitive", "total", "strongly-total", "consistent"}) {
    const Outcome table = run({"check", "--property", p, e.str()});
    const Outcome json = run({"--format", "json", "check", "--property", p, e.str()});
    CHECK(table.code == json.code);
    CHECK(Json::parse(json.out)["verdict"] == (table.code == 0));
  }
}

TEST_CASE("extend command") {
  const TempFile f("spo.csv", "a,b,c\n0,1,0\n0,0,0\n0,0,0\n");
  const Outcome o = run({"--format", "json", "extend", "--class", "r1", f.str()});
  CHECK(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["inserted_arcs"] == Json::parse(R"([["a","c"],["b","c"]])"));
  CHECK(j["verified_star_compatible"] == true);

  const Outcome rnd = run({"extend", "--class", "r1", "--order", "random", "--seed", "9", f.str()});
  CHECK(rnd.code == 0);
  CHECK(rnd.out.find("verified_total: true") != std::string::npos);

  const TempFile chain("chain.csv", "a,b,c\n0,1,0\n0,0,1\n0,0,0\n");
  const Outcome pre = run({"extend", chain.str()});
  CHECK(pre.code == 2);
  CHECK(pre.err.find("error:") == 0);
}

TEST_CASE("oracle command") {
  const Outcome o = run({"oracle", "--property", "least-closure", "--values", "0,1/2,1"});
  CHECK(o.code == 0);
  CHECK(o.out.find("instances_checked: 81") != std::string::npos);
  CHECK(o.out.find("result: PASS") != std::string::npos);

  const Outcome a = run({"--format", "json", "--tnorm", "lukasiewicz", "oracle", "--property",
                         "adjunction", "--step", "0.25"});
  CHECK(a.code == 0);
  CHECK(Json::parse(a.out)["violations"] == 0);

  CHECK(run({"oracle", "--property", "least-closure", "--values", "0,x"}).code == 2);
  CHECK(run({"oracle", "--property", "consistency-equiv", "--size", "3", "--cap", "100"}).code ==
        2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"closure"}).code == 2);
  CHECK(run({"--tnorm", "min", "closure", "x.json"}).code == 2);
  CHECK(run({"closure", "/nonexistent/fuzzypref.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("tnorm flag overrides the file") {
  const TempFile f = json_file("tn", product_pair_r(), TNormId::product);
  const Outcome o = run({"--format", "json", "--tnorm", "godel", "closure", f.str()});
  CHECK(parse_relation_json(o.out).tnorm == TNormId::godel);
}
