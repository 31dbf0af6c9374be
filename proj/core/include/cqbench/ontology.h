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

#ifndef CQBENCH_ONTOLOGY_H_
#define CQBENCH_ONTOLOGY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cqbench/common.h"
#include "cqbench/kif.h"

namespace cqbench {

// Nature of a SUMO term.
enum class TermKind { kObjectInstance, kClass, kRelation, kAttribute, kUnknown };

std::string_view to_string(TermKind kind);
// One-letter code: o, c, r, a (and ? for unknown).
char kind_code(TermKind kind);

// Taxonomy extracted from SUO-KIF.
//
// Indexes `subclass`, `subAttribute`, `subrelation` and `instance` facts
// plus the disjointness declared by `disjoint`, `partition`,
// `disjointDecomposition` and `contraryAttribute`. Every other top-level
// form is kept verbatim in opaque_axioms().
//
// Specialisation edges of all three hierarchies share one graph, which must
// be acyclic. Disjointness is closed under specialisation on both sides: if
// A and B are disjoint, every A' below A is disjoint from every B' below B.
//
// The index is immutable once built and safe to query from many threads.
class OntologyIndex {
 public:
  using TermId = std::uint32_t;
  using TermPair = std::pair<std::string, std::string>;

  OntologyIndex() = default;

  // Reflexive-transitive closure over subclass/subAttribute/subrelation.
  // Unknown terms are only related to themselves.
  bool is_subclass_of(std::string_view a, std::string_view b) const;

  // Propagated disjointness; symmetric.
  bool are_disjoint(std::string_view a, std::string_view b) const;

  // Declared pair (X, Y) that makes `a` and `b` disjoint, with X above `a`
  // and Y above `b`. Ancestors closer to `a` are preferred.
  std::optional<TermPair> disjointness_witness(std::string_view a,
                                               std::string_view b) const;

  // A term that is disjoint from itself has an empty extension in every
  // model. build_index reports each such term as a diagnostic.
  bool is_vacuous(std::string_view term) const;

  // True when `(instance term C)` is declared for some C below `cls`.
  bool is_instance_of(std::string_view term, std::string_view cls) const;
  // Directly declared classes of `term`, in declaration order.
  std::vector<std::string> instance_classes(std::string_view term) const;

  TermKind term_kind(std::string_view term) const;

  bool contains(std::string_view term) const;
  size_t term_count() const { return names_.size(); }
  // All indexed terms in first-seen order.
  const std::vector<std::string>& terms() const { return names_; }

  // Direct parents / declared disjoint partners, sorted by name.
  std::vector<std::string> parents(std::string_view term) const;
  std::vector<std::string> declared_disjoint(std::string_view term) const;

  const std::vector<KifExpr>& opaque_axioms() const { return opaque_; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  friend class IndexBuilder;

  std::optional<TermId> lookup(std::string_view term) const;
  // Ancestors in breadth-first order starting with the term itself.
  std::vector<TermId> ancestors_by_distance(TermId id) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, TermId> ids_;
  std::vector<std::vector<TermId>> parents_;
  std::vector<std::vector<TermId>> ancestors_;  // sorted, reflexive
  std::vector<std::vector<TermId>> disjoint_;   // sorted, symmetric
  std::vector<std::vector<TermId>> instance_of_;
  std::vector<TermKind> kinds_;
  std::vector<bool> vacuous_;
  std::vector<KifExpr> opaque_;
  std::vector<Diagnostic> diagnostics_;
};

// Builds the index. Throws ParseError for a recognised predicate with the
// wrong arity and Error naming the cycle when the taxonomy is cyclic.
OntologyIndex build_index(std::span<const KifExpr> exprs);

}  // namespace cqbench

#endif  // CQBENCH_ONTOLOGY_H_
