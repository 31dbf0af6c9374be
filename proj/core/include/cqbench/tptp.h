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

#ifndef CQBENCH_TPTP_H_
#define CQBENCH_TPTP_H_

#include <string>
#include <string_view>
#include <vector>

#include "cqbench/common.h"
#include "cqbench/formula.h"
#include "cqbench/generator.h"

namespace cqbench {
namespace tptp {

// Untyped first-order term. Names keep their TPTP spelling, so a quoted
// constant is stored with its quotes.
struct Term {
  std::string name;
  bool is_variable = false;
  std::vector<Term> arguments;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Formula {
  enum class Kind {
    kTrue,
    kFalse,
    kAtom,      // name(arguments...)
    kEqual,     // arguments[0] = arguments[1]
    kNotEqual,  // arguments[0] != arguments[1]
    kNot,
    kAnd,
    kOr,
    kImplies,
    kReverseImplies,
    kIff,
    kXor,
    kNor,
    kNand,
    kForall,
    kExists,
  };

  Kind kind = Kind::kTrue;
  std::string name;
  std::vector<Term> arguments;
  std::vector<std::string> variables;
  std::vector<Formula> children;

  friend bool operator==(const Formula&, const Formula&) = default;
};

struct AnnotatedFormula {
  std::string name;
  std::string role;
  Formula formula;
  SourceLocation location;
};

struct Problem {
  std::vector<std::string> includes;  // unquoted file names
  std::vector<AnnotatedFormula> formulas;
};

// Reads the FOF subset of TPTP: `include` directives and `fof` annotated
// formulas with the full connective set. `%` and `/* */` comments are
// skipped. Throws ParseError on anything else, and on free variables.
Problem parse_problem(std::string_view text, std::string_view source);

std::string to_string(const Formula& formula);

}  // namespace tptp

struct TptpOptions {
  // Prepended to predicates and SUMO constants, e.g. "s__". When empty,
  // constants are written as quoted atoms ('Smoking') since SUMO terms
  // start with an upper-case letter.
  std::string symbol_prefix;
};

// FOF rendering of a competency-question formula.
std::string to_fof(const Formula& formula, const TptpOptions& options = {});

// Inverse of to_fof for formulas over the question vocabulary. Throws
// OutOfFragment for other predicates or connectives.
Formula from_fof(const tptp::Formula& formula,
                 const TptpOptions& options = {});

// Strips quotes and the symbol prefix from a constant name.
std::string sumo_name(std::string_view tptp_name, const TptpOptions& options);
std::string tptp_constant(std::string_view sumo_term,
                          const TptpOptions& options);

struct TptpDocument {
  std::string name;  // "<cq id>_truth" / "<cq id>_falsity"
  std::string text;
};

struct TptpDocumentPair {
  TptpDocument truth;
  TptpDocument falsity;
};

// One include directive plus one conjecture per document. Byte-deterministic.
TptpDocumentPair emit_tptp(const CompetencyQuestion& cq,
                           std::string_view axiom_file_name,
                           const TptpOptions& options = {});

}  // namespace cqbench

#endif  // CQBENCH_TPTP_H_
