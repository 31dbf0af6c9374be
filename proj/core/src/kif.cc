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

#include "cqbench/kif.h"

#include <cctype>

namespace cqbench {

KifExpr KifExpr::atom(std::string text, SourceLocation location) {
  KifExpr e;
  e.kind_ = Kind::kAtom;
  e.text_ = std::move(text);
  e.location_ = std::move(location);
  return e;
}

KifExpr KifExpr::list(std::vector<KifExpr> children, SourceLocation location) {
  KifExpr e;
  e.kind_ = Kind::kList;
  e.children_ = std::move(children);
  e.location_ = std::move(location);
  return e;
}

bool KifExpr::is_variable() const {
  return is_atom() && !text_.empty() && (text_[0] == '?' || text_[0] == '@');
}

bool KifExpr::is_string() const {
  return is_atom() && !text_.empty() && text_[0] == '"';
}

std::string_view KifExpr::head() const {
  if (!is_list() || children_.empty() || !children_[0].is_atom()) return {};
  return children_[0].text();
}

bool operator==(const KifExpr& a, const KifExpr& b) {
  return a.kind_ == b.kind_ && a.text_ == b.text_ && a.children_ == b.children_;
}

namespace {

class KifReader {
 public:
  KifReader(std::string_view text, std::string_view source)
      : text_(text), source_(source) {}

  std::vector<KifExpr> read_all() {
    std::vector<KifExpr> out;
    // Explicit stack of open lists keeps deeply nested input off the call
    // stack.
    struct Open {
      std::vector<KifExpr> children;
      SourceLocation location;
    };
    std::vector<Open> stack;

    auto emit = [&](KifExpr e) {
      if (stack.empty()) {
        out.push_back(std::move(e));
      } else {
        stack.back().children.push_back(std::move(e));
      }
    };

    while (skip_space()) {
      char c = text_[pos_];
      if (c == '(') {
        stack.push_back({{}, here()});
        advance();
      } else if (c == ')') {
        if (stack.empty()) throw ParseError("unexpected ')'", here());
        SourceLocation at = here();
        advance();
        Open open = std::move(stack.back());
        stack.pop_back();
        if (open.children.empty()) throw ParseError("empty list", open.location);
        emit(KifExpr::list(std::move(open.children), std::move(open.location)));
      } else if (c == '"') {
        emit(read_string());
      } else {
        emit(read_token());
      }
    }
    if (!stack.empty()) {
      throw ParseError("unbalanced '(': missing ')'", stack.back().location);
    }
    return out;
  }

 private:
  SourceLocation here() const { return {std::string(source_), line_, column_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  // Skips white space and comments; false at end of input.
  bool skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return true;
      }
    }
    return false;
  }

  KifExpr read_string() {
    SourceLocation start = here();
    size_t begin = pos_;
    advance();
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
      advance();
    }
    if (pos_ >= text_.size()) throw ParseError("unterminated string", start);
    advance();
    return KifExpr::atom(std::string(text_.substr(begin, pos_ - begin)),
                         std::move(start));
  }

  KifExpr read_token() {
    SourceLocation start = here();
    size_t begin = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(' || c == ')' || c == '"' || c == ';' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      advance();
    }
    return KifExpr::atom(std::string(text_.substr(begin, pos_ - begin)),
                         std::move(start));
  }

  std::string_view text_;
  std::string_view source_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

void render(const KifExpr& e, std::string& out) {
  if (e.is_atom()) {
    out += e.text();
    return;
  }
  out.push_back('(');
  for (size_t i = 0; i < e.size(); ++i) {
    if (i > 0) out.push_back(' ');
    render(e[i], out);
  }
  out.push_back(')');
}

}  // namespace

std::vector<KifExpr> parse_kif(std::string_view text, std::string_view source) {
  return KifReader(text, source).read_all();
}

std::string to_string(const KifExpr& expr) {
  std::string out;
  render(expr, out);
  return out;
}

}  // namespace cqbench
