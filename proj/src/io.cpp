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

#include "fuzzypref/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fuzzypref {

RelationDocument relation_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("relation document must be a JSON object");
  if (!doc.contains("universe")) throw ParseError("missing field 'universe'");
  if (!doc.contains("matrix")) throw ParseError("missing field 'matrix'");

  const Json& ju = doc["universe"];
  if (!ju.is_array()) throw ParseError("field 'universe' must be an array of strings");
  std::vector<std::string> labels;
  for (const auto& l : ju) {
    if (!l.is_string()) throw ParseError("field 'universe' must be an array of strings");
    labels.push_back(l.get<std::string>());
  }

  const Json& jm = doc["matrix"];
  if (!jm.is_array()) throw ParseError("field 'matrix' must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& jr : jm) {
    if (!jr.is_array()) throw ParseError("field 'matrix' must be an array of rows");
    auto& row = rows.emplace_back();
    for (const auto& v : jr) {
      if (!v.is_number()) throw ParseError("field 'matrix' contains a non-numeric entry");
      row.push_back(v.get<double>());
    }
  }

  std::optional<TNormId> tnorm;
  if (doc.contains("tnorm") && !doc["tnorm"].is_null()) {
    if (!doc["tnorm"].is_string()) throw ParseError("field 'tnorm' must be a string");
    tnorm = parse_tnorm(doc["tnorm"].get<std::string>());
  }
  return {FuzzyRelation::from_rows(Universe(std::move(labels)), rows), tnorm};
}

RelationDocument parse_relation_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return relation_from_json(doc);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

RelationDocument parse_relation_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = trim(text.substr(start, nl - start));
    if (!line.empty()) lines.push_back(line);
    start = nl + 1;
  }
  if (lines.empty()) throw ParseError("empty CSV input");

  std::vector<std::string> labels;
  for (auto f : split_fields(lines[0])) labels.emplace_back(f);

  std::vector<std::vector<double>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto& row = rows.emplace_back();
    for (auto f : split_fields(lines[i])) {
      double v = 0.0;
      auto res = std::from_chars(f.data(), f.data() + f.size(), v);
      if (res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
        throw ParseError("CSV line " + std::to_string(i + 1) + ": '" + std::string(f) +
                         "' is not a number");
      }
      row.push_back(v);
    }
  }
  return {FuzzyRelation::from_rows(Universe(std::move(labels)), rows), std::nullopt};
}

RelationDocument load_relation(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (path.extension() == ".csv") return parse_relation_csv(text);
  return parse_relation_json(text);
}

Json relation_to_json(const FuzzyRelation& r, std::optional<TNormId> t) {
  Json j;
  j["universe"] = r.universe().labels();
  if (t) j["tnorm"] = std::string(to_string(*t));
  j["matrix"] = r.rows();
  return j;
}

Json to_json(const ExtensionReport& report, TNormId t, RelationClass c) {
  Json j;
  j["tnorm"] = std::string(to_string(t));
  j["class"] = std::string(to_string(c));
  j["result"] = relation_to_json(report.result, t);
  Json arcs = Json::array();
  for (const auto& [x, y] : report.inserted_arcs) arcs.push_back({x, y});
  j["inserted_arcs"] = std::move(arcs);
  j["iterations"] = report.iterations;
  j["verified_total"] = report.verified_total;
  j["verified_transitive"] = report.verified_transitive;
  j["verified_star_compatible"] = report.verified_star_compatible;
  j["verified_class_member"] = report.verified_class_member;
  j["converged"] = report.converged;
  return j;
}

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_json(const Json& j, int indent, int level, std::string& out) {
  const auto newline = [&](int lvl) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * lvl), ' ');
  };
  switch (j.type()) {
    case Json::value_t::number_float:
      out += g17(j.get<double>());
      return;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Rows of numbers stay on one line even when indenting.
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) {
        return e.is_primitive();
      });
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        if (!flat) {
          newline(level + 1);
        } else if (!first && indent >= 0) {
          out += ' ';
        }
        write_json(e, indent, level + 1, out);
        first = false;
      }
      if (!flat) newline(level);
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        newline(level + 1);
        out += Json(k).dump();
        out += indent < 0 ? ":" : ": ";
        write_json(v, indent, level + 1, out);
        first = false;
      }
      newline(level);
      out += '}';
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  write_json(j, indent, 0, out);
  return out;
}

std::string relation_to_csv(const FuzzyRelation& r) {
  std::string out;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ',';
    out += r.universe().label(i);
  }
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ',';
      out += g17(r(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_degree(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_table(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    cells[0][i + 1] = r.universe().label(i);
    cells[i + 1][0] = r.universe().label(i);
    for (std::size_t j = 0; j < n; ++j) cells[i + 1][j + 1] = format_degree(r(i, j));
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c <= n; ++c) {
      if (c) out += "  ";
      out.append(width[c] - row[c].size(), ' ');
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

}  // namespace fuzzypref
