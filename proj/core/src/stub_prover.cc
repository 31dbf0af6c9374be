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

#include "cqbench/stub_prover.h"

#include <set>

#include <fmt/format.h>

#include "cqbench/ontology.h"

namespace cqbench {

namespace {

constexpr std::string_view kTaxonomyPredicates[] = {
    "subclass", "subAttribute", "subrelation", "instance", "disjoint",
    "contraryAttribute"};

std::optional<KifExpr> ground_fact(const tptp::Formula& f,
                                   const TptpOptions& options) {
  if (f.kind != tptp::Formula::Kind::kAtom || f.arguments.size() != 2) {
    return std::nullopt;
  }
  std::string name = sumo_name(f.name, options);
  if (std::find(std::begin(kTaxonomyPredicates), std::end(kTaxonomyPredicates),
                name) == std::end(kTaxonomyPredicates)) {
    return std::nullopt;
  }
  std::vector<KifExpr> items{KifExpr::atom(name)};
  for (const auto& arg : f.arguments) {
    if (arg.is_variable || !arg.arguments.empty()) return std::nullopt;
    items.push_back(KifExpr::atom(sumo_name(arg.name, options)));
  }
  return KifExpr::list(std::move(items));
}

std::optional<BridgeAxiom> bridge(const tptp::Formula& f,
                                  const TptpOptions& options) {
  try {
    ConjectureView v = analyze_conjecture(from_fof(f, options));
    if (v.negated || v.shape != ConjectureShape::kParticipation ||
        v.antecedent.shape != StatementShape::kInstanceOf ||
        v.consequent.shape != StatementShape::kInstanceOf) {
      return std::nullopt;
    }
    return BridgeAxiom{v.consequent.term, *v.role, v.antecedent.term};
  } catch (const OutOfFragment&) {
    return std::nullopt;
  }
}

std::filesystem::path resolve_include(const std::string& name,
                                      const std::filesystem::path& base,
                                      const StubProverOptions& options) {
  std::vector<std::filesystem::path> candidates{base / name};
  for (const auto& dir : options.include_dirs) candidates.push_back(dir / name);
  for (const auto& c : candidates) {
    if (std::filesystem::exists(c)) return c;
  }
  throw Error(fmt::format("include file '{}' not found", name));
}

void load(const std::filesystem::path& path, const StubProverOptions& options,
          std::set<std::filesystem::path>& seen,
          std::vector<tptp::AnnotatedFormula>& formulas) {
  auto canonical = std::filesystem::weakly_canonical(path);
  if (!seen.insert(canonical).second) return;
  TextSource src = read_text_file(path);
  tptp::Problem problem = tptp::parse_problem(src.content, src.name);
  for (const auto& inc : problem.includes) {
    load(resolve_include(inc, path.parent_path(), options), options, seen,
         formulas);
  }
  for (auto& f : problem.formulas) formulas.push_back(std::move(f));
}

}  // namespace

TaxonomyTheory extract_theory(const std::vector<tptp::AnnotatedFormula>& axioms,
                              const TptpOptions& options) {
  TaxonomyTheory theory;
  for (const auto& af : axioms) {
    if (af.role == "conjecture" || af.role == "negated_conjecture") continue;
    if (auto fact = ground_fact(af.formula, options)) {
      theory.facts.push_back(std::move(*fact));
    } else if (auto b = bridge(af.formula, options)) {
      theory.bridges.push_back(std::move(*b));
    } else {
      ++theory.ignored;
    }
  }
  return theory;
}

std::string run_stub_prover(const std::filesystem::path& problem,
                            const StubProverOptions& options) {
  std::set<std::filesystem::path> seen;
  std::vector<tptp::AnnotatedFormula> formulas;
  load(problem, options, seen, formulas);

  const tptp::AnnotatedFormula* conjecture = nullptr;
  for (const auto& f : formulas) {
    if (f.role != "conjecture") continue;
    if (conjecture != nullptr) {
      throw Error(fmt::format("{}: more than one conjecture", problem.string()));
    }
    conjecture = &f;
  }
  if (conjecture == nullptr) {
    throw Error(fmt::format("{}: no conjecture", problem.string()));
  }

  TaxonomyTheory theory = extract_theory(formulas, options.tptp);
  OntologyIndex index = build_index(theory.facts);
  std::vector<BridgeAxiom> bridges;
  for (auto& b : theory.bridges) {
    if (index.term_kind(b.process_class) == TermKind::kClass &&
        index.term_kind(b.participant_class) == TermKind::kClass) {
      bridges.push_back(std::move(b));
    }
  }
  TaxonomyOracle oracle(index, std::move(bridges));

  std::string status = "GaveUp";
  try {
    Formula goal = from_fof(conjecture->formula, options.tptp);
    ConjectureView view = analyze_conjecture(goal);
    if (oracle.proves(goal)) {
      status = "Theorem";
    } else if (!view.negated && !oracle.vacuous(view.antecedent) &&
               oracle.proves(complement(goal))) {
      status = "CounterSatisfiable";
    }
  } catch (const OutOfFragment&) {
    status = "GaveUp";
  }
  return fmt::format("% SZS status {} for {}\n", status,
                     problem.stem().string());
}

}  // namespace cqbench
