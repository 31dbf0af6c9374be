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

#ifndef CQBENCH_ORACLE_H_
#define CQBENCH_ORACLE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqbench/classification.h"
#include "cqbench/formula.h"
#include "cqbench/generator.h"
#include "cqbench/ontology.h"

namespace cqbench {

// "Every member of participant_class takes `role` in some instance of
// process_class":
//   (forall (?Y) (=> (instance ?Y C) (exists (?X) (and (instance ?X P) (role ?X ?Y)))))
struct BridgeAxiom {
  std::string process_class;
  SemanticRole role = SemanticRole::kAgent;
  std::string participant_class;

  Formula as_formula() const;

  friend bool operator==(const BridgeAxiom&, const BridgeAxiom&) = default;
};

// CSV with columns process_class, role, participant_class (header optional).
std::vector<BridgeAxiom> parse_bridge_axioms(std::string_view csv,
                                             std::string_view source);

// Decision procedure for the question fragment over a taxonomy.
//
// Sound but incomplete: proves() only succeeds when subsumption,
// disjointness, vacuity or a bridge axiom entails the conjecture.
class TaxonomyOracle {
 public:
  TaxonomyOracle(const OntologyIndex& index, std::vector<BridgeAxiom> bridges);

  // Throws OutOfFragment when the formula has none of the conjecture shapes.
  bool proves(const Formula& conjecture) const;

  Classification classify(const Formula& truth, const Formula& falsity) const;

  // Human-readable taxonomic relation between two statements, e.g.
  // "disjoint(Substance, Process)" or "subclass(Removing, Transfer)".
  std::optional<std::string> explain(const UnaryStatement& a,
                                     const UnaryStatement& b) const;

  bool subsumes(const UnaryStatement& narrow, const UnaryStatement& wide) const;
  bool disjoint(const UnaryStatement& a, const UnaryStatement& b) const;
  bool vacuous(const UnaryStatement& s) const;

  const OntologyIndex& index() const { return *index_; }
  const std::vector<BridgeAxiom>& bridges() const { return bridges_; }

 private:
  bool proves(const ConjectureView& view) const;
  bool bridged(const UnaryStatement& participant, const UnaryStatement& process,
               SemanticRole role) const;

  const OntologyIndex* index_;
  std::vector<BridgeAxiom> bridges_;
};

Classification oracle_classify(const CompetencyQuestion& cq,
                               const OntologyIndex& index,
                               std::span<const BridgeAxiom> bridges);

// Small finite interpretation. Unary extensions and role relations are bit
// sets: element i is bit i; the pair (x, y) is bit x * domain_size + y.
struct FiniteModel {
  static constexpr int kMaxDomain = 6;

  int domain_size = 0;
  std::map<std::string, std::uint32_t, std::less<>> extensions;
  std::map<SemanticRole, std::uint64_t> roles;
  std::map<std::string, int, std::less<>> constants;

  bool member(std::string_view term, int element) const;
  bool related(SemanticRole role, int x, int y) const;
};

// Exhaustive satisfaction check. Throws Error when the formula is open or
// mentions a term, role or constant the model does not interpret.
bool brute_force_check(const Formula& formula, const FiniteModel& model);

inline constexpr size_t kMaxEnumeratedTerms = 5;
inline constexpr int kMaxEnumeratedDomain = 4;

// Visits every model over {0..domain_size-1} that interprets `terms` and, if
// given, `role`, and respects the subclass and disjointness relations the
// index derives among `terms` as well as every bridge axiom whose classes
// are all among `terms` and whose role is `role`. Stops early when
// `visit` returns false. Throws Error above 5 terms or domain size 4.
void for_each_model(const OntologyIndex& index,
                    std::span<const std::string> terms, int domain_size,
                    std::optional<SemanticRole> role,
                    std::span<const BridgeAxiom> bridges,
                    const std::function<bool(const FiniteModel&)>& visit);

std::vector<FiniteModel> enumerate_models(
    const OntologyIndex& index, std::span<const std::string> terms,
    int domain_size, std::optional<SemanticRole> role = std::nullopt,
    std::span<const BridgeAxiom> bridges = {});

}  // namespace cqbench

#endif  // CQBENCH_ORACLE_H_
