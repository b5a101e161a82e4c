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

// Poset files, record and count CSVs, and provenance headers.
//
// Poset file (JSON):
//   {"d": 3, "labels": ["a", "b", "c"], "relations": [[0, 2], [1, 2]]}
// where [i, j] means p_i <= p_j. Relations need not be transitively closed.

#ifndef POSETDP_IO_H_
#define POSETDP_IO_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "posetdp/mechanism.h"
#include "posetdp/poset.h"

namespace posetdp {

inline constexpr int kSchemaVersion = 1;

// Throws ValidationError on malformed input, bad indices, duplicate labels;
// CycleError on cyclic relations.
Poset ParsePoset(std::string_view text);
Poset ReadPosetFile(const std::string& path);

// Serializes the cover relations (the transitive reduction) and labels.
// ParsePoset(PosetToJson(p)) == p.
std::string PosetToJson(const Poset& poset);
void WritePosetFile(const Poset& poset, const std::string& path);

// One respondent per row, `d` comma-separated 0/1 entries. A first row
// that is not numeric is treated as a header. Throws RecordError with the
// zero-based data row of the first malformed row.
std::vector<std::vector<std::uint8_t>> ParseRecordsCsv(std::string_view text,
                                                       int d);

// A single data row: record_count followed by the d counts. An optional
// non-numeric header row is skipped.
CountVector ParseCountsCsv(std::string_view text, int d);

std::string ReadTextFile(const std::string& path);
// Writes `text` to `path`, or to stdout when path is empty or "-".
void WriteTextOutput(const std::string& path, const std::string& text);

// Key/value pairs echoed into CSV comment lines ("# key=value") after the
// schema_version line.
using Provenance = std::vector<std::pair<std::string, std::string>>;
std::string CsvPreamble(const Provenance& provenance);

std::string FormatDouble(double value);

}  // namespace posetdp

#endif  // POSETDP_IO_H_
