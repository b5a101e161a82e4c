// Copyright 2026 The posetdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posetdp/io.h"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "posetdp/error.h"

namespace posetdp {
namespace {

using Json = nlohmann::json;

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

bool ParseInt(std::string_view field, std::int64_t& out) {
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, out);
  return ec == std::errc() && ptr == end && !field.empty();
}

bool IsNumericRow(std::string_view line) {
  for (std::string_view f : SplitFields(line)) {
    std::int64_t v;
    if (!ParseInt(f, v)) return false;
  }
  return true;
}

// Non-blank, non-comment lines.
std::vector<std::string_view> DataLines(std::string_view text) {
  std::vector<std::string_view> out;
  for (std::string_view line : SplitLines(text)) {
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace

Poset ParsePoset(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed poset file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("d") || !doc["d"].is_number_integer()) {
    throw ValidationError("poset file needs an integer field 'd'");
  }
  const std::int64_t d = doc["d"].get<std::int64_t>();
  if (d < 0 || d > 1'000'000) throw ValidationError("'d' is out of range");
  std::vector<std::string> labels;
  if (doc.contains("labels") && !doc["labels"].is_null()) {
    if (!doc["labels"].is_array()) {
      throw ValidationError("'labels' must be an array of strings");
    }
    for (const Json& l : doc["labels"]) {
      if (!l.is_string()) {
        throw ValidationError("'labels' must be an array of strings");
      }
      labels.push_back(l.get<std::string>());
    }
  }
  std::vector<Relation> relations;
  if (doc.contains("relations")) {
    if (!doc["relations"].is_array()) {
      throw ValidationError("'relations' must be an array of [i, j] pairs");
    }
    for (const Json& r : doc["relations"]) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
          !r[1].is_number_integer()) {
        throw ValidationError("'relations' must be an array of [i, j] pairs");
      }
      const std::int64_t i = r[0].get<std::int64_t>();
      const std::int64_t j = r[1].get<std::int64_t>();
      if (i < 0 || j < 0 || i >= d || j >= d) {
        throw ValidationError("relation index out of range: [" +
                              std::to_string(i) + ", " + std::to_string(j) +
                              "]");
      }
      relations.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Poset::FromRelations(static_cast<int>(d), relations,
                              std::move(labels));
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << text;
}

Poset ReadPosetFile(const std::string& path) {
  return ParsePoset(ReadTextFile(path));
}

std::string PosetToJson(const Poset& poset) {
  Json doc;
  doc["d"] = poset.size();
  if (!poset.labels().empty()) doc["labels"] = poset.labels();
  Json relations = Json::array();
  for (const auto& [i, j] : ReductionEdges(poset)) {
    relations.push_back({i, j});
  }
  doc["relations"] = std::move(relations);
  return doc.dump() + "\n";
}

void WritePosetFile(const Poset& poset, const std::string& path) {
  WriteTextOutput(path, PosetToJson(poset));
}

std::vector<std::vector<std::uint8_t>> ParseRecordsCsv(std::string_view text,
                                                       int d) {
  std::vector<std::string_view> lines = DataLines(text);
  std::size_t first = 0;
  if (!lines.empty() && !IsNumericRow(lines[0])) first = 1;
  std::vector<std::vector<std::uint8_t>> records;
  for (std::size_t k = first; k < lines.size(); ++k) {
    const std::size_t row = k - first;
    const std::vector<std::string_view> fields = SplitFields(lines[k]);
    if (static_cast<int>(fields.size()) != d) {
      throw RecordError(row, "record " + std::to_string(row) + " has " +
                                 std::to_string(fields.size()) +
                                 " columns, expected " + std::to_string(d));
    }
    std::vector<std::uint8_t> rec(d);
    for (int i = 0; i < d; ++i) {
      std::int64_t v;
      if (!ParseInt(fields[i], v) || (v != 0 && v != 1)) {
        throw RecordError(row, "record " + std::to_string(row) +
                                   " has a non-binary entry in column " +
                                   std::to_string(i));
      }
      rec[i] = static_cast<std::uint8_t>(v);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

CountVector ParseCountsCsv(std::string_view text, int d) {
  std::vector<std::string_view> lines = DataLines(text);
  if (!lines.empty() && !IsNumericRow(lines[0])) lines.erase(lines.begin());
  if (lines.size() != 1) {
    throw ValidationError("counts file must hold exactly one data row");
  }
  const std::vector<std::string_view> fields = SplitFields(lines[0]);
  if (static_cast<int>(fields.size()) != d + 1) {
    throw ValidationError("counts row needs record_count plus " +
                          std::to_string(d) + " counts");
  }
  CountVector out;
  std::int64_t v;
  if (!ParseInt(fields[0], v)) throw ValidationError("bad record_count");
  out.record_count = v;
  for (int i = 0; i < d; ++i) {
    if (!ParseInt(fields[i + 1], v)) {
      throw RecordError(i, "count " + std::to_string(i) + " is not an integer");
    }
    out.counts.push_back(v);
  }
  return out;
}

std::string CsvPreamble(const Provenance& provenance) {
  std::string out = "# schema_version=" + std::to_string(kSchemaVersion) + "\n";
  for (const auto& [key, value] : provenance) {
    out += "# " + key + "=" + value + "\n";
  }
  return out;
}

std::string FormatDouble(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace posetdp
