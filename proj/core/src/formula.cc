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

#include "cqbench/formula.h"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace cqbench {

std::string_view to_string(Predicate predicate) {
  switch (predicate) {
    case Predicate::kInstance: return "instance";
    case Predicate::kAttribute: return "attribute";
    case Predicate::kEqual: return "equal";
    case Predicate::kAgent: return "agent";
    case Predicate::kInstrument: return "instrument";
    case Predicate::kResult: return "result";
  }
  return "instance";
}

Predicate role_predicate(SemanticRole role) {
  switch (role) {
    case SemanticRole::kAgent: return Predicate::kAgent;
    case SemanticRole::kInstrument: return Predicate::kInstrument;
    case SemanticRole::kResult: return Predicate::kResult;
  }
  return Predicate::kAgent;
}

std::optional<SemanticRole> predicate_role(Predicate predicate) {
  switch (predicate) {
    case Predicate::kAgent: return SemanticRole::kAgent;
    case Predicate::kInstrument: return SemanticRole::kInstrument;
    case Predicate::kResult: return SemanticRole::kResult;
    default: return std::nullopt;
  }
}

Formula Formula::atom(Predicate predicate, Term first, Term second) {
  Formula f;
  f.kind_ = Kind::kAtom;
  f.predicate_ = predicate;
  f.arguments_ = {std::move(first), std::move(second)};
  return f;
}

Formula Formula::negation(Formula operand) {
  Formula f;
  f.kind_ = Kind::kNot;
  f.children_.push_back(std::move(operand));
  return f;
}

Formula Formula::conjunction(Formula left, Formula right) {
  Formula f;
  f.kind_ = Kind::kAnd;
  f.children_.push_back(std::move(left));
  f.children_.push_back(std::move(right));
  return f;
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  Formula f;
  f.kind_ = Kind::kImplies;
  f.children_.push_back(std::move(antecedent));
  f.children_.push_back(std::move(consequent));
  return f;
}

Formula Formula::forall(std::vector<std::string> variables, Formula body) {
  Formula f;
  f.kind_ = Kind::kForall;
  f.variables_ = std::move(variables);
  f.children_.push_back(std::move(body));
  return f;
}

Formula Formula::exists(std::vector<std::string> variables, Formula body) {
  Formula f = forall(std::move(variables), std::move(body));
  f.kind_ = Kind::kExists;
  return f;
}

namespace {

void render_kif(const Formula& f, std::string& out) {
  using Kind = Formula::Kind;
  switch (f.kind()) {
    case Kind::kAtom:
      out += '(';
      out += to_string(f.predicate());
      for (const auto& arg : f.arguments()) {
        out += ' ';
        if (arg.is_variable) out += '?';
        out += arg.name;
      }
      out += ')';
      return;
    case Kind::kNot:
      out += "(not ";
      render_kif(f.child(), out);
      out += ')';
      return;
    case Kind::kAnd:
    case Kind::kImplies:
      out += f.kind() == Kind::kAnd ? "(and " : "(=> ";
      render_kif(f.child(0), out);
      out += ' ';
      render_kif(f.child(1), out);
      out += ')';
      return;
    case Kind::kForall:
    case Kind::kExists: {
      out += f.kind() == Kind::kForall ? "(forall (" : "(exists (";
      for (size_t i = 0; i < f.variables().size(); ++i) {
        if (i > 0) out += ' ';
        out += '?';
        out += f.variables()[i];
      }
      out += ") ";
      render_kif(f.child(), out);
      out += ')';
      return;
    }
  }
}

void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
  if (f.kind() == Formula::Kind::kAtom) {
    for (const auto& arg : f.arguments()) {
      if (!arg.is_variable) continue;
      if (std::find(bound.begin(), bound.end(), arg.name) != bound.end()) {
        continue;
      }
      if (std::find(out.begin(), out.end(), arg.name) == out.end()) {
        out.push_back(arg.name);
      }
    }
    return;
  }
  size_t mark = bound.size();
  bound.insert(bound.end(), f.variables().begin(), f.variables().end());
  for (const auto& child : f.children()) collect_free(child, bound, out);
  bound.resize(mark);
}

bool unique_bindings(const Formula& f, std::set<std::string>& seen) {
  for (const auto& v : f.variables()) {
    if (!seen.insert(v).second) return false;
  }
  for (const auto& child : f.children()) {
    if (!unique_bindings(child, seen)) return false;
  }
  return true;
}

void collect_constants(const Formula& f, std::vector<std::string>& out) {
  for (const auto& arg : f.arguments()) {
    if (!arg.is_variable &&
        std::find(out.begin(), out.end(), arg.name) == out.end()) {
      out.push_back(arg.name);
    }
  }
  for (const auto& child : f.children()) collect_constants(child, out);
}

[[noreturn]] void out_of_fragment(const Formula& f, std::string_view why) {
  throw OutOfFragment(
      fmt::format("formula outside the conjecture shapes ({}): {}", why,
                  to_kif(f)));
}

std::optional<StatementShape> statement_shape(Predicate p) {
  switch (p) {
    case Predicate::kInstance: return StatementShape::kInstanceOf;
    case Predicate::kAttribute: return StatementShape::kHasAttribute;
    case Predicate::kEqual: return StatementShape::kEqualTo;
    default: return std::nullopt;
  }
}

// Reads a statement atom (pred ?var Term).
UnaryStatement read_statement(const Formula& f, const std::string& var,
                              const Formula& whole) {
  if (f.kind() != Formula::Kind::kAtom) out_of_fragment(whole, "expected atom");
  auto shape = statement_shape(f.predicate());
  if (!shape) out_of_fragment(whole, "expected a statement predicate");
  const auto& args = f.arguments();
  if (!args[0].is_variable || args[0].name != var || args[1].is_variable) {
    out_of_fragment(whole, "statement must relate the bound variable to a term");
  }
  return {*shape, args[1].name};
}

}  // namespace

std::string to_kif(const Formula& formula) {
  std::string out;
  render_kif(formula, out);
  return out;
}

std::vector<std::string> free_variables(const Formula& formula) {
  std::vector<std::string> bound, out;
  collect_free(formula, bound, out);
  return out;
}

bool is_closed(const Formula& formula) {
  return free_variables(formula).empty();
}

bool has_unique_bindings(const Formula& formula) {
  std::set<std::string> seen;
  return unique_bindings(formula, seen);
}

std::vector<std::string> constants(const Formula& formula) {
  std::vector<std::string> out;
  collect_constants(formula, out);
  return out;
}

Formula statement_atom(const UnaryStatement& statement,
                       std::string_view variable) {
  Predicate p = Predicate::kInstance;
  switch (statement.shape) {
    case StatementShape::kInstanceOf: p = Predicate::kInstance; break;
    case StatementShape::kHasAttribute: p = Predicate::kAttribute; break;
    case StatementShape::kEqualTo: p = Predicate::kEqual; break;
  }
  return Formula::atom(p, Term::variable(std::string(variable)),
                       Term::constant(statement.term));
}

std::string_view to_string(ConjectureShape shape) {
  switch (shape) {
    case ConjectureShape::kInclusion: return "inclusion";
    case ConjectureShape::kExclusion: return "exclusion";
    case ConjectureShape::kParticipation: return "participation";
    case ConjectureShape::kNonParticipation: return "non-participation";
  }
  return "inclusion";
}

ConjectureView analyze_conjecture(const Formula& formula) {
  using Kind = Formula::Kind;
  ConjectureView view;
  const Formula* f = &formula;
  if (f->kind() == Kind::kNot) {
    view.negated = true;
    f = &f->child();
  }
  if (f->kind() != Kind::kForall || f->variables().size() != 1) {
    out_of_fragment(formula, "expected one universally bound variable");
  }
  const std::string& outer = f->variables()[0];
  const Formula& body = f->child();
  if (body.kind() != Kind::kImplies) {
    out_of_fragment(formula, "expected an implication");
  }
  view.antecedent = read_statement(body.child(0), outer, formula);

  const Formula* rhs = &body.child(1);
  bool negative = false;
  if (rhs->kind() == Kind::kNot) {
    negative = true;
    rhs = &rhs->child();
  }
  if (rhs->kind() == Kind::kAtom) {
    view.shape =
        negative ? ConjectureShape::kExclusion : ConjectureShape::kInclusion;
    view.consequent = read_statement(*rhs, outer, formula);
    return view;
  }
  if (rhs->kind() != Kind::kExists || rhs->variables().size() != 1) {
    out_of_fragment(formula, "expected a statement or an existential");
  }
  const std::string& inner = rhs->variables()[0];
  const Formula& conj = rhs->child();
  if (inner == outer || conj.kind() != Kind::kAnd) {
    out_of_fragment(formula, "expected a conjunction under a fresh variable");
  }
  view.consequent = read_statement(conj.child(0), inner, formula);
  const Formula& role = conj.child(1);
  if (role.kind() != Kind::kAtom || !predicate_role(role.predicate())) {
    out_of_fragment(formula, "expected a role atom");
  }
  const auto& args = role.arguments();
  if (!args[0].is_variable || args[0].name != inner || !args[1].is_variable ||
      args[1].name != outer) {
    out_of_fragment(formula, "role atom must relate the inner to the outer variable");
  }
  view.role = predicate_role(role.predicate());
  view.shape = negative ? ConjectureShape::kNonParticipation
                        : ConjectureShape::kParticipation;
  return view;
}

Formula build_conjecture(const ConjectureView& view) {
  Formula result = [&] {
    switch (view.shape) {
      case ConjectureShape::kInclusion:
      case ConjectureShape::kExclusion: {
        Formula b = statement_atom(view.consequent, "X");
        if (view.shape == ConjectureShape::kExclusion) {
          b = Formula::negation(std::move(b));
        }
        return Formula::forall(
            {"X"}, Formula::implication(statement_atom(view.antecedent, "X"),
                                        std::move(b)));
      }
      case ConjectureShape::kParticipation:
      case ConjectureShape::kNonParticipation: {
        if (!view.role) {
          throw OutOfFragment("participation conjecture without a role");
        }
        Formula ex = Formula::exists(
            {"X"},
            Formula::conjunction(
                statement_atom(view.consequent, "X"),
                Formula::atom(role_predicate(*view.role), Term::variable("X"),
                              Term::variable("Y"))));
        if (view.shape == ConjectureShape::kNonParticipation) {
          ex = Formula::negation(std::move(ex));
        }
        return Formula::forall(
            {"Y"}, Formula::implication(statement_atom(view.antecedent, "Y"),
                                        std::move(ex)));
      }
    }
    throw OutOfFragment("unknown conjecture shape");
  }();
  return view.negated ? Formula::negation(std::move(result)) : result;
}

std::string_view to_string(FalsityMode mode) {
  return mode == FalsityMode::kComplement ? "complement" : "negation";
}

std::optional<FalsityMode> parse_falsity_mode(std::string_view text) {
  if (text == "complement") return FalsityMode::kComplement;
  if (text == "negation") return FalsityMode::kNegation;
  return std::nullopt;
}

Formula complement(const Formula& formula) {
  using Kind = Formula::Kind;
  ConjectureView view = analyze_conjecture(formula);
  if (view.negated) {
    out_of_fragment(formula, "complement of a negated conjecture");
  }
  // Toggle the negation right below the implication, keeping every other
  // node as written.
  const Formula& body = formula.child();
  const Formula& rhs = body.child(1);
  Formula flipped =
      rhs.kind() == Kind::kNot ? rhs.child() : Formula::negation(rhs);
  return Formula::forall(formula.variables(),
                         Formula::implication(body.child(0), std::move(flipped)));
}

TestPair make_test_pair(const Formula& truth, FalsityMode mode) {
  if (analyze_conjecture(truth).negated) {
    out_of_fragment(truth, "truth conjecture must not be negated");
  }
  if (mode == FalsityMode::kComplement) return {truth, complement(truth)};
  return {truth, Formula::negation(truth)};
}

}  // namespace cqbench
