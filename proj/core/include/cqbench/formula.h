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

#ifndef CQBENCH_FORMULA_H_
#define CQBENCH_FORMULA_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cqbench/common.h"
#include "cqbench/mapping.h"
#include "cqbench/wordnet.h"

namespace cqbench {

enum class Predicate { kInstance, kAttribute, kEqual, kAgent, kInstrument, kResult };

// SUMO spelling: "instance", "attribute", "equal", "agent", ...
std::string_view to_string(Predicate predicate);
Predicate role_predicate(SemanticRole role);
std::optional<SemanticRole> predicate_role(Predicate predicate);

struct Term {
  std::string name;
  bool is_variable = false;

  static Term variable(std::string name) { return {std::move(name), true}; }
  static Term constant(std::string name) { return {std::move(name), false}; }

  friend bool operator==(const Term&, const Term&) = default;
};

// First-order formula over the SUMO vocabulary used by competency questions:
// binary atoms, negation, conjunction, implication and the two quantifiers.
class Formula {
 public:
  enum class Kind { kAtom, kNot, kAnd, kImplies, kForall, kExists };

  static Formula atom(Predicate predicate, Term first, Term second);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula implication(Formula antecedent, Formula consequent);
  static Formula forall(std::vector<std::string> variables, Formula body);
  static Formula exists(std::vector<std::string> variables, Formula body);

  Kind kind() const { return kind_; }
  Predicate predicate() const { return predicate_; }
  const std::vector<Term>& arguments() const { return arguments_; }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Formula>& children() const { return children_; }
  const Formula& child(size_t i = 0) const { return children_.at(i); }

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Kind kind_ = Kind::kAtom;
  Predicate predicate_ = Predicate::kInstance;
  std::vector<Term> arguments_;
  std::vector<std::string> variables_;
  std::vector<Formula> children_;
};

// SUO-KIF rendering, e.g. "(forall (?X) (=> (instance ?X Smoking) ...))".
std::string to_kif(const Formula& formula);

// Free variables in first-occurrence order.
std::vector<std::string> free_variables(const Formula& formula);
bool is_closed(const Formula& formula);
// True when no variable is bound twice.
bool has_unique_bindings(const Formula& formula);
// Constants in first-occurrence order, without duplicates.
std::vector<std::string> constants(const Formula& formula);

// The atom a mapping statement contributes for `variable`.
Formula statement_atom(const UnaryStatement& statement,
                       std::string_view variable);

// Conjecture shapes produced by the question patterns.
//   kInclusion:        (forall (?X) (=> A(X) B(X)))
//   kExclusion:        (forall (?X) (=> A(X) (not B(X))))
//   kParticipation:    (forall (?Y) (=> A(Y) (exists (?X) (and B(X) (r ?X ?Y)))))
//   kNonParticipation: (forall (?Y) (=> A(Y) (not (exists (?X) ...))))
// Any of the four may be wrapped in one negation (strict falsity mode).
enum class ConjectureShape {
  kInclusion,
  kExclusion,
  kParticipation,
  kNonParticipation,
};

std::string_view to_string(ConjectureShape shape);

struct ConjectureView {
  ConjectureShape shape = ConjectureShape::kInclusion;
  bool negated = false;
  UnaryStatement antecedent;  // A
  UnaryStatement consequent;  // B
  std::optional<SemanticRole> role;
};

// Thrown for formulas outside the four shapes.
class OutOfFragment : public Error {
 public:
  using Error::Error;
};

ConjectureView analyze_conjecture(const Formula& formula);
Formula build_conjecture(const ConjectureView& view);

enum class FalsityMode {
  kComplement,  // negate the consequent
  kNegation,    // negate the whole conjecture
};

std::string_view to_string(FalsityMode mode);
std::optional<FalsityMode> parse_falsity_mode(std::string_view text);

// Complement rule: inclusion <-> exclusion, participation <->
// non-participation. An involution. Throws OutOfFragment for negated or
// unrecognised formulas.
Formula complement(const Formula& formula);

struct TestPair {
  Formula truth;
  Formula falsity;
};

TestPair make_test_pair(const Formula& truth,
                        FalsityMode mode = FalsityMode::kComplement);

}  // namespace cqbench

#endif  // CQBENCH_FORMULA_H_
