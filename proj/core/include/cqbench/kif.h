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

#ifndef CQBENCH_KIF_H_
#define CQBENCH_KIF_H_

#include <string>
#include <string_view>
#include <vector>

#include "cqbench/common.h"

namespace cqbench {

// One SUO-KIF expression: an atom or a parenthesised list.
//
// Atoms keep their token text verbatim. Tokens starting with `?` (and row
// variables starting with `@`) are variables; string literals keep their
// surrounding double quotes.
class KifExpr {
 public:
  enum class Kind { kAtom, kList };

  static KifExpr atom(std::string text, SourceLocation location = {});
  static KifExpr list(std::vector<KifExpr> children,
                      SourceLocation location = {});

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::kAtom; }
  bool is_list() const { return kind_ == Kind::kList; }

  // Atom accessors.
  const std::string& text() const { return text_; }
  bool is_variable() const;
  bool is_string() const;

  // List accessors.
  const std::vector<KifExpr>& children() const { return children_; }
  size_t size() const { return children_.size(); }
  const KifExpr& operator[](size_t i) const { return children_[i]; }
  // Text of the first child when it is an atom, empty otherwise.
  std::string_view head() const;

  const SourceLocation& location() const { return location_; }

  // Structural equality; locations are ignored.
  friend bool operator==(const KifExpr& a, const KifExpr& b);

 private:
  Kind kind_ = Kind::kAtom;
  std::string text_;
  std::vector<KifExpr> children_;
  SourceLocation location_;
};

// Reads every top-level expression of `text`. `;` starts a comment that runs
// to the end of the line. Throws ParseError on unbalanced parentheses, on an
// empty list and on an unterminated string.
std::vector<KifExpr> parse_kif(std::string_view text,
                               std::string_view source = "<kif>");

// Single-line rendering; parse_kif(to_string(e)) yields e again.
std::string to_string(const KifExpr& expr);

}  // namespace cqbench

#endif  // CQBENCH_KIF_H_
