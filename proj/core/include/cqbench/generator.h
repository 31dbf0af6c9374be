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

#ifndef CQBENCH_GENERATOR_H_
#define CQBENCH_GENERATOR_H_

#include <array>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqbench/common.h"
#include "cqbench/formula.h"
#include "cqbench/mapping.h"
#include "cqbench/ontology.h"
#include "cqbench/wordnet.h"

namespace cqbench {

// The ten question patterns, in table order.
enum class QpKind {
  kNounHypo1,
  kNounHypo2,
  kVerbHypo1,
  kVerbHypo2,
  kAntonym1,
  kAntonym2,
  kAntonym3,
  kMorphAgent,
  kMorphInstrument,
  kMorphResult,
};

inline constexpr std::array<QpKind, 10> kAllQpKinds = {
    QpKind::kNounHypo1,  QpKind::kNounHypo2,       QpKind::kVerbHypo1,
    QpKind::kVerbHypo2,  QpKind::kAntonym1,        QpKind::kAntonym2,
    QpKind::kAntonym3,   QpKind::kMorphAgent,      QpKind::kMorphInstrument,
    QpKind::kMorphResult};

// "Noun #1", ..., "Agent".
std::string_view qp_label(QpKind kind);
// "noun1", ..., "agent". Used in ids and file names.
std::string_view qp_tag(QpKind kind);
// Accepts a tag or a label.
std::optional<QpKind> parse_qp(std::string_view text);
size_t qp_index(QpKind kind);

struct CompetencyQuestion {
  std::string id;
  QpKind qp = QpKind::kNounHypo1;
  // hyponymy: (hypo, hyper); antonymy: (antecedent, consequent);
  // morphosemantic: (verb, noun).
  std::vector<SynsetId> synsets;
  std::vector<MappingStatement> statements;  // aligned with synsets
  Formula truth;
  Formula falsity;
};

struct GeneratorOptions {
  FalsityMode falsity_mode = FalsityMode::kComplement;
  std::set<QpKind> enabled{kAllQpKinds.begin(), kAllQpKinds.end()};
  bool transitive_hyponymy = false;
};

struct GenerationResult {
  std::vector<CompetencyQuestion> cqs;
  std::vector<Diagnostic> diagnostics;

  void append(GenerationResult other);
};

// Deterministic id: "<qp tag>_<synset>_<synset>_<Term>_<Term>", restricted
// to [A-Za-z0-9_] so it is a valid TPTP name.
std::string make_cq_id(QpKind kind, std::span<const SynsetId> synsets,
                       std::span<const MappingStatement> statements);

// Inclusion questions over direct hyponym pairs:
//   (forall (?X) (=> hypo(X) hyper(X)))
// Pattern #2 when the hyponym is mapped by equivalence, #1 otherwise. A
// synset with several translatable entries yields one question per
// combination; pairs over the same SUMO term are skipped.
GenerationResult generate_hyponymy_cqs(const SynsetStore& store,
                                       const MappingTable& mapping,
                                       const OntologyIndex& index,
                                       PartOfSpeech pos,
                                       const GeneratorOptions& options = {});

// Exclusion questions over antonym pairs:
//   (forall (?X) (=> a(X) (not b(X))))
// Pattern #1/#2/#3 by the number of equivalence-mapped sides (2/1/0). The
// antecedent is the side whose term lies strictly below the other side's
// term when there is one, otherwise the equivalence-mapped side, otherwise
// the smaller synset id.
GenerationResult generate_antonymy_cqs(const SynsetStore& store,
                                       const MappingTable& mapping,
                                       const OntologyIndex& index,
                                       const GeneratorOptions& options = {});

// Participation questions over morphosemantic links:
//   (forall (?Y) (=> noun(Y) (exists (?X) (and verb(X) (role ?X ?Y)))))
GenerationResult generate_morphosemantic_cqs(
    std::span<const MorphLink> links, const MappingTable& mapping,
    const OntologyIndex& index, const GeneratorOptions& options = {});

// All enabled patterns in table order.
GenerationResult generate_all(const SynsetStore& store,
                              std::span<const MorphLink> links,
                              const MappingTable& mapping,
                              const OntologyIndex& index,
                              const GeneratorOptions& options = {});

}  // namespace cqbench

#endif  // CQBENCH_GENERATOR_H_
