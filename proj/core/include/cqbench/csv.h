// Copyright 2026 The cqbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CQBENCH_CSV_H_
#define CQBENCH_CSV_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cqbench {

// RFC 4180 style CSV. Fields containing a comma, a quote or a line break are
// quoted; embedded quotes are doubled.
struct CsvRow {
  std::vector<std::string> fields;
  int line = 0;  // 1-based line where the record starts
};

// Parses every record in `text`. Blank lines are skipped. Throws ParseError
// on an unterminated quoted field.
std::vector<CsvRow> parse_csv(std::string_view text, std::string_view source);

std::string csv_escape(std::string_view field);
std::string csv_line(const std::vector<std::string>& fields);

// Column lookup over a header row.
class CsvHeader {
 public:
  explicit CsvHeader(const CsvRow& header);

  std::optional<size_t> find(std::string_view column) const;
  // Throws ParseError naming the missing column.
  size_t require(std::string_view column, std::string_view source) const;

 private:
  std::vector<std::string> names_;
};

}  // namespace cqbench

#endif  // CQBENCH_CSV_H_
