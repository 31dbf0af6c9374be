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

#ifndef CQBENCH_COMMON_H_
#define CQBENCH_COMMON_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cqbench {

// A position inside a named input. Lines and columns are 1-based; 0 means
// "not known".
struct SourceLocation {
  std::string source;
  int line = 0;
  int column = 0;

  std::string str() const;
};

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input. The message already carries the location.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceLocation location);

  const SourceLocation& location() const { return location_; }

 private:
  SourceLocation location_;
};

enum class Severity { kNote, kWarning };

// Non-fatal finding reported by a loader or generator. Diagnostics are
// always produced in a deterministic order.
struct Diagnostic {
  Severity severity = Severity::kWarning;
  std::string message;
  SourceLocation location;

  std::string str() const;
};

// In-memory copy of an input file.
struct TextSource {
  std::string name;
  std::string content;
};

TextSource read_text_file(const std::filesystem::path& path);

// Writes `content` to `path` through a temporary sibling file and a rename,
// so readers never observe a partially written file.
void write_file_atomically(const std::filesystem::path& path,
                           std::string_view content);

// Splits `text` into lines, dropping the terminators ("\n" or "\r\n").
std::vector<std::string_view> split_lines(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace cqbench

#endif  // CQBENCH_COMMON_H_
