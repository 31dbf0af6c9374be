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

#include "cqbench/tptp.h"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

namespace cqbench {
namespace tptp {

namespace {

struct Token {
  enum class Kind {
    kLower,
    kUpper,
    kQuoted,    // 'single quoted', quotes kept
    kDollar,    // $true
    kDistinct,  // "double quoted", quotes kept
    kNumber,
    kPunct,
    kEnd,
  };
  Kind kind = Kind::kEnd;
  std::string text;
  SourceLocation location;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string_view source)
      : text_(text), source_(source) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space_and_comments();
      Token t;
      t.location = here();
      if (pos_ >= text_.size()) {
        tokens.push_back(std::move(t));
        return tokens;
      }
      char c = text_[pos_];
      if (std::islower(static_cast<unsigned char>(c)) ||
          std::isupper(static_cast<unsigned char>(c)) || c == '$') {
        t.kind = c == '$' ? Token::Kind::kDollar
                 : std::islower(static_cast<unsigned char>(c))
                     ? Token::Kind::kLower
                     : Token::Kind::kUpper;
        size_t start = pos_;
        advance();
        while (pos_ < text_.size() && is_word_char(text_[pos_])) advance();
        t.text = std::string(text_.substr(start, pos_ - start));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Token::Kind::kNumber;
        size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          advance();
        }
        t.text = std::string(text_.substr(start, pos_ - start));
      } else if (c == '\'' || c == '"') {
        t.kind = c == '\'' ? Token::Kind::kQuoted : Token::Kind::kDistinct;
        t.text = quoted(c, t.location);
      } else {
        t.kind = Token::Kind::kPunct;
        t.text = punct(t.location);
      }
      tokens.push_back(std::move(t));
    }
  }

 private:
  static bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  SourceLocation here() const {
    return {std::string(source_), line_, column_};
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        SourceLocation start = here();
        advance();
        advance();
        while (pos_ + 1 < text_.size() &&
               !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) {
          advance();
        }
        if (pos_ + 1 >= text_.size()) {
          throw ParseError("unterminated block comment", start);
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  std::string quoted(char quote, const SourceLocation& start) {
    std::string out(1, quote);
    advance();
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        throw ParseError("unterminated quoted name", start);
      }
      char c = text_[pos_];
      out += c;
      advance();
      if (c == '\\') {
        if (pos_ >= text_.size()) {
          throw ParseError("unterminated quoted name", start);
        }
        out += text_[pos_];
        advance();
      } else if (c == quote) {
        if (out.size() == 2) throw ParseError("empty quoted name", start);
        return out;
      }
    }
  }

  std::string punct(const SourceLocation& at) {
    static constexpr std::string_view kOperators[] = {
        "<=>", "<~>", "=>", "<=", "~|", "~&", "!=", "(", ")", "[", "]",
        ",",   ".",   ":",  "!",  "?",  "~",  "&",  "|",  "="};
    std::string_view rest = text_.substr(pos_);
    for (std::string_view op : kOperators) {
      if (rest.starts_with(op)) {
        for (size_t i = 0; i < op.size(); ++i) advance();
        return std::string(op);
      }
    }
    throw ParseError(fmt::format("unexpected character '{}'", text_[pos_]), at);
  }

  std::string_view text_;
  std::string_view source_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

using Kind = Formula::Kind;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Problem run() {
    Problem problem;
    while (peek().kind != Token::Kind::kEnd) {
      const Token& t = next();
      if (t.kind == Token::Kind::kLower && t.text == "include") {
        expect("(");
        const Token& file = next();
        if (file.kind != Token::Kind::kQuoted) {
          fail(file, "expected a quoted file name");
        }
        problem.includes.push_back(unquote(file.text));
        if (accept(",")) skip_general_term();
        expect(")");
        expect(".");
      } else if (t.kind == Token::Kind::kLower && t.text == "fof") {
        AnnotatedFormula af;
        af.location = t.location;
        expect("(");
        const Token& name = next();
        if (name.kind != Token::Kind::kLower &&
            name.kind != Token::Kind::kQuoted &&
            name.kind != Token::Kind::kNumber) {
          fail(name, "expected a formula name");
        }
        af.name = name.text;
        expect(",");
        const Token& role = next();
        if (role.kind != Token::Kind::kLower) fail(role, "expected a role");
        af.role = role.text;
        expect(",");
        af.formula = formula();
        while (accept(",")) skip_general_term();
        expect(")");
        expect(".");
        problem.formulas.push_back(std::move(af));
      } else {
        fail(t, fmt::format("unsupported input '{}'", t.text));
      }
    }
    return problem;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::kEnd) ++pos_;
    return t;
  }

  bool at_punct(std::string_view p) const {
    return peek().kind == Token::Kind::kPunct && peek().text == p;
  }

  bool accept(std::string_view p) {
    if (!at_punct(p)) return false;
    ++pos_;
    return true;
  }

  void expect(std::string_view p) {
    if (!accept(p)) {
      fail(peek(), fmt::format("expected '{}'", p));
    }
  }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    std::string found =
        t.kind == Token::Kind::kEnd ? "end of input" : "'" + t.text + "'";
    throw ParseError(fmt::format("{} near {}", message, found), t.location);
  }

  static std::string unquote(std::string_view quoted) {
    std::string out;
    for (size_t i = 1; i + 1 < quoted.size(); ++i) {
      if (quoted[i] == '\\' && i + 2 < quoted.size()) ++i;
      out += quoted[i];
    }
    return out;
  }

  // Skips a general term: a word, a quoted item, or a bracketed sequence.
  void skip_general_term() {
    int depth = 0;
    bool continued = false;
    do {
      const Token& t = next();
      if (t.kind == Token::Kind::kEnd) fail(t, "unterminated annotation");
      continued = false;
      if (t.kind == Token::Kind::kPunct) {
        if (t.text == "(" || t.text == "[") ++depth;
        if (t.text == ")" || t.text == "]") --depth;
        if (depth < 0) fail(t, "unbalanced annotation");
        continued = t.text == ":";
      }
    } while (depth > 0 || continued || at_punct("(") || at_punct(":"));
  }

  Formula formula() {
    Formula lhs = unitary();
    if (peek().kind != Token::Kind::kPunct) return lhs;
    const std::string op = peek().text;
    if (op == "&" || op == "|") {
      Kind kind = op == "&" ? Kind::kAnd : Kind::kOr;
      while (accept(op)) {
        Formula node;
        node.kind = kind;
        node.children.push_back(std::move(lhs));
        node.children.push_back(unitary());
        lhs = std::move(node);
      }
      if (at_punct("&") || at_punct("|")) {
        fail(peek(), "mixed '&' and '|' need parentheses");
      }
      return lhs;
    }
    static const std::pair<std::string_view, Kind> kBinary[] = {
        {"=>", Kind::kImplies}, {"<=", Kind::kReverseImplies},
        {"<=>", Kind::kIff},    {"<~>", Kind::kXor},
        {"~|", Kind::kNor},     {"~&", Kind::kNand}};
    for (auto [text, kind] : kBinary) {
      if (op != text) continue;
      ++pos_;
      Formula node;
      node.kind = kind;
      node.children.push_back(std::move(lhs));
      node.children.push_back(unitary());
      return node;
    }
    return lhs;
  }

  Formula unitary() {
    if (at_punct("!") || at_punct("?")) {
      Formula node;
      node.kind = next().text == "!" ? Kind::kForall : Kind::kExists;
      expect("[");
      do {
        const Token& v = next();
        if (v.kind != Token::Kind::kUpper) fail(v, "expected a variable");
        node.variables.push_back(v.text);
      } while (accept(","));
      expect("]");
      expect(":");
      size_t mark = bound_.size();
      bound_.insert(bound_.end(), node.variables.begin(), node.variables.end());
      node.children.push_back(unitary());
      bound_.resize(mark);
      return node;
    }
    if (accept("~")) {
      Formula node;
      node.kind = Kind::kNot;
      node.children.push_back(unitary());
      return node;
    }
    if (accept("(")) {
      Formula inner = formula();
      expect(")");
      return inner;
    }
    return atomic();
  }

  Formula atomic() {
    const Token& start = peek();
    Term lhs = term();
    if (at_punct("=") || at_punct("!=")) {
      Formula node;
      node.kind = next().text == "=" ? Kind::kEqual : Kind::kNotEqual;
      node.arguments.push_back(std::move(lhs));
      node.arguments.push_back(term());
      return node;
    }
    if (lhs.is_variable) fail(start, "a variable is not a formula");
    Formula node;
    if (lhs.name == "$true" || lhs.name == "$false") {
      if (!lhs.arguments.empty()) fail(start, "constant formula with arguments");
      node.kind = lhs.name == "$true" ? Kind::kTrue : Kind::kFalse;
      return node;
    }
    node.kind = Kind::kAtom;
    node.name = std::move(lhs.name);
    node.arguments = std::move(lhs.arguments);
    return node;
  }

  Term term() {
    const Token& t = next();
    Term out;
    switch (t.kind) {
      case Token::Kind::kUpper:
        if (std::find(bound_.begin(), bound_.end(), t.text) == bound_.end()) {
          fail(t, fmt::format("free variable {}", t.text));
        }
        out.name = t.text;
        out.is_variable = true;
        return out;
      case Token::Kind::kNumber:
      case Token::Kind::kDistinct:
        out.name = t.text;
        return out;
      case Token::Kind::kLower:
      case Token::Kind::kQuoted:
      case Token::Kind::kDollar:
        out.name = t.text;
        if (accept("(")) {
          do {
            out.arguments.push_back(term());
          } while (accept(","));
          expect(")");
        }
        return out;
      default:
        fail(t, "expected a term");
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  std::vector<std::string> bound_;
};

void render_term(const Term& t, std::string& out) {
  out += t.name;
  if (t.arguments.empty()) return;
  out += '(';
  for (size_t i = 0; i < t.arguments.size(); ++i) {
    if (i > 0) out += ',';
    render_term(t.arguments[i], out);
  }
  out += ')';
}

std::string_view binary_operator(Kind kind) {
  switch (kind) {
    case Kind::kAnd: return "&";
    case Kind::kOr: return "|";
    case Kind::kImplies: return "=>";
    case Kind::kReverseImplies: return "<=";
    case Kind::kIff: return "<=>";
    case Kind::kXor: return "<~>";
    case Kind::kNor: return "~|";
    case Kind::kNand: return "~&";
    default: return "";
  }
}

void render(const Formula& f, std::string& out) {
  switch (f.kind) {
    case Kind::kTrue: out += "$true"; return;
    case Kind::kFalse: out += "$false"; return;
    case Kind::kAtom: {
      Term t{f.name, false, f.arguments};
      render_term(t, out);
      return;
    }
    case Kind::kEqual:
    case Kind::kNotEqual:
      out += '(';
      render_term(f.arguments[0], out);
      out += f.kind == Kind::kEqual ? " = " : " != ";
      render_term(f.arguments[1], out);
      out += ')';
      return;
    case Kind::kNot:
      out += "~ ";
      render(f.children[0], out);
      return;
    case Kind::kForall:
    case Kind::kExists:
      out += f.kind == Kind::kForall ? "! [" : "? [";
      for (size_t i = 0; i < f.variables.size(); ++i) {
        if (i > 0) out += ',';
        out += f.variables[i];
      }
      out += "] : ";
      render(f.children[0], out);
      return;
    default:
      out += '(';
      render(f.children[0], out);
      out += ' ';
      out += binary_operator(f.kind);
      out += ' ';
      render(f.children[1], out);
      out += ')';
      return;
  }
}

}  // namespace

Problem parse_problem(std::string_view text, std::string_view source) {
  return Parser(Lexer(text, source).run()).run();
}

std::string to_string(const Formula& formula) {
  std::string out;
  render(formula, out);
  return out;
}

}  // namespace tptp

namespace {

std::string tptp_variable(std::string_view name) {
  std::string v(name);
  if (!v.empty()) {
    v[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(v[0])));
  }
  return v;
}

tptp::Term convert_term(const Term& t, const TptpOptions& options) {
  if (t.is_variable) return {tptp_variable(t.name), true, {}};
  return {tptp_constant(t.name, options), false, {}};
}

tptp::Formula convert(const Formula& f, const TptpOptions& options) {
  using K = tptp::Formula::Kind;
  tptp::Formula out;
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      for (const auto& arg : f.arguments()) {
        out.arguments.push_back(convert_term(arg, options));
      }
      if (f.predicate() == Predicate::kEqual) {
        out.kind = K::kEqual;
      } else {
        out.kind = K::kAtom;
        out.name = options.symbol_prefix + std::string(to_string(f.predicate()));
      }
      return out;
    case Formula::Kind::kNot: out.kind = K::kNot; break;
    case Formula::Kind::kAnd: out.kind = K::kAnd; break;
    case Formula::Kind::kImplies: out.kind = K::kImplies; break;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      out.kind = f.kind() == Formula::Kind::kForall ? K::kForall : K::kExists;
      for (const auto& v : f.variables()) out.variables.push_back(tptp_variable(v));
      break;
  }
  for (const auto& child : f.children()) {
    out.children.push_back(convert(child, options));
  }
  return out;
}

Term back_term(const tptp::Term& t, const TptpOptions& options) {
  if (!t.arguments.empty()) {
    throw OutOfFragment(fmt::format("unexpected function term {}", t.name));
  }
  if (t.is_variable) return Term::variable(t.name);
  return Term::constant(sumo_name(t.name, options));
}

}  // namespace

std::string sumo_name(std::string_view tptp_name, const TptpOptions& options) {
  std::string name;
  if (tptp_name.size() >= 2 && tptp_name.front() == '\'' &&
      tptp_name.back() == '\'') {
    for (size_t i = 1; i + 1 < tptp_name.size(); ++i) {
      if (tptp_name[i] == '\\' && i + 2 < tptp_name.size()) ++i;
      name += tptp_name[i];
    }
  } else {
    name = std::string(tptp_name);
  }
  if (!options.symbol_prefix.empty() &&
      std::string_view(name).starts_with(options.symbol_prefix)) {
    name.erase(0, options.symbol_prefix.size());
  }
  return name;
}

std::string tptp_constant(std::string_view sumo_term,
                          const TptpOptions& options) {
  if (!options.symbol_prefix.empty()) {
    return options.symbol_prefix + std::string(sumo_term);
  }
  std::string out = "'";
  for (char c : sumo_term) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  out += '\'';
  return out;
}

std::string to_fof(const Formula& formula, const TptpOptions& options) {
  return tptp::to_string(convert(formula, options));
}

Formula from_fof(const tptp::Formula& f, const TptpOptions& options) {
  using K = tptp::Formula::Kind;
  auto binary = [&](auto make) {
    return make(from_fof(f.children.at(0), options),
                from_fof(f.children.at(1), options));
  };
  switch (f.kind) {
    case K::kAtom: {
      std::string name = f.name;
      if (!options.symbol_prefix.empty() &&
          std::string_view(name).starts_with(options.symbol_prefix)) {
        name.erase(0, options.symbol_prefix.size());
      }
      static constexpr Predicate kPredicates[] = {
          Predicate::kInstance, Predicate::kAttribute, Predicate::kAgent,
          Predicate::kInstrument, Predicate::kResult};
      for (Predicate p : kPredicates) {
        if (name == to_string(p) && f.arguments.size() == 2) {
          return Formula::atom(p, back_term(f.arguments[0], options),
                               back_term(f.arguments[1], options));
        }
      }
      throw OutOfFragment(fmt::format("unexpected predicate {}", f.name));
    }
    case K::kEqual:
      return Formula::atom(Predicate::kEqual, back_term(f.arguments[0], options),
                           back_term(f.arguments[1], options));
    case K::kNot:
      return Formula::negation(from_fof(f.children.at(0), options));
    case K::kAnd:
      return binary(Formula::conjunction);
    case K::kImplies:
      return binary(Formula::implication);
    case K::kForall:
      return Formula::forall(f.variables, from_fof(f.children.at(0), options));
    case K::kExists:
      return Formula::exists(f.variables, from_fof(f.children.at(0), options));
    default:
      throw OutOfFragment(
          fmt::format("connective outside the question vocabulary in {}",
                      tptp::to_string(f)));
  }
}

namespace {

TptpDocument document(const CompetencyQuestion& cq, std::string_view test,
                      const Formula& conjecture,
                      std::string_view axiom_file_name,
                      const TptpOptions& options) {
  std::string synsets, mapping;
  for (size_t i = 0; i < cq.synsets.size(); ++i) {
    if (i > 0) {
      synsets += ' ';
      mapping += ' ';
    }
    synsets += cq.synsets[i].str();
    if (i < cq.statements.size()) {
      mapping += format_annotation(cq.statements[i].entry);
    }
  }
  TptpDocument doc;
  doc.name = fmt::format("{}_{}", cq.id, test);
  doc.text = fmt::format(
      "% Question: {}\n"
      "% Pattern : {}\n"
      "% Test    : {}\n"
      "% Synsets : {}\n"
      "% Mapping : {}\n"
      "include({}).\n"
      "fof({}, conjecture, {}).\n",
      cq.id, qp_label(cq.qp), test, synsets, mapping,
      tptp_constant(axiom_file_name, {}), doc.name, to_fof(conjecture, options));
  return doc;
}

}  // namespace

TptpDocumentPair emit_tptp(const CompetencyQuestion& cq,
                           std::string_view axiom_file_name,
                           const TptpOptions& options) {
  return {document(cq, "truth", cq.truth, axiom_file_name, options),
          document(cq, "falsity", cq.falsity, axiom_file_name, options)};
}

}  // namespace cqbench
