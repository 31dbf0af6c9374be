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

#ifndef CQBENCH_MAPPING_H_
#define CQBENCH_MAPPING_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqbench/common.h"
#include "cqbench/ontology.h"
#include "cqbench/wordnet.h"

namespace cqbench {

enum class MappingRelation : char {
  kEquivalence = '=',
  kSubsumption = '+',
  kInstantiation = '@',
};

std::optional<MappingRelation> parse_mapping_relation(char symbol);
char symbol(MappingRelation relation);

struct MappingEntry {
  SynsetId synset;
  std::string sumo_term;
  MappingRelation relation = MappingRelation::kEquivalence;

  friend bool operator==(const MappingEntry&, const MappingEntry&) = default;
};

// "&%Term=" / "&%Term+" / "&%Term@"
std::string format_annotation(const MappingEntry& entry);

using MappingTable = std::map<SynsetId, std::vector<MappingEntry>>;

struct MappingParseResult {
  MappingTable table;
  std::vector<Diagnostic> diagnostics;
};

enum class UnknownSuffixPolicy {
  kError,  // throw ParseError
  kSkip,   // drop the annotation with a diagnostic
};

// Reads WordNet-to-SUMO mapping files: WordNet data lines whose gloss is
// followed by one or more `&%Term<symbol>` annotations. Lines starting
// with `;` are comments. A data line without any annotation is skipped with
// a diagnostic.
MappingParseResult parse_mapping(
    std::span<const TextSource> files,
    UnknownSuffixPolicy policy = UnknownSuffixPolicy::kError);

// How a synset's mapping reads as a formula over one free variable X.
enum class StatementShape {
  kInstanceOf,    // (instance X Term)
  kHasAttribute,  // (attribute X Term)
  kEqualTo,       // (equal X Term)
};

std::string_view to_string(StatementShape shape);

// A one-variable statement without provenance.
struct UnaryStatement {
  StatementShape shape = StatementShape::kInstanceOf;
  std::string term;

  friend bool operator==(const UnaryStatement&, const UnaryStatement&) =
      default;
};

struct MappingStatement {
  StatementShape shape = StatementShape::kInstanceOf;
  std::string term;
  MappingEntry entry;

  UnaryStatement unary() const { return {shape, term}; }
};

// Raised for entries whose SUMO term is a relation or is not in the index.
class UntranslatableEntry : public Error {
 public:
  UntranslatableEntry(const MappingEntry& entry, TermKind kind);

  const MappingEntry& entry() const { return entry_; }
  TermKind kind() const { return kind_; }

 private:
  MappingEntry entry_;
  TermKind kind_;
};

// Class -> InstanceOf, Attribute -> HasAttribute, ObjectInstance -> EqualTo.
// The mapping relation does not influence the shape.
MappingStatement translate_entry(const MappingEntry& entry,
                                 const OntologyIndex& index);

}  // namespace cqbench

#endif  // CQBENCH_MAPPING_H_
