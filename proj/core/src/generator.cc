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

#include "cqbench/generator.h"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include <fmt/format.h>

#include "cqbench/oracle.h"

namespace cqbench {

namespace {

struct QpNames {
  std::string_view label;
  std::string_view tag;
};

constexpr std::array<QpNames, 10> kQpNames = {{
    {"Noun #1", "noun1"},
    {"Noun #2", "noun2"},
    {"Verb #1", "verb1"},
    {"Verb #2", "verb2"},
    {"Antonym #1", "antonym1"},
    {"Antonym #2", "antonym2"},
    {"Antonym #3", "antonym3"},
    {"Agent", "agent"},
    {"Instrument", "instrument"},
    {"Result", "result"},
}};

}  // namespace

size_t qp_index(QpKind kind) { return static_cast<size_t>(kind); }

std::string_view qp_label(QpKind kind) { return kQpNames[qp_index(kind)].label; }

std::string_view qp_tag(QpKind kind) { return kQpNames[qp_index(kind)].tag; }

std::optional<QpKind> parse_qp(std::string_view text) {
  for (QpKind kind : kAllQpKinds) {
    if (text == qp_tag(kind) || text == qp_label(kind)) return kind;
  }
  return std::nullopt;
}

void GenerationResult::append(GenerationResult other) {
  cqs.insert(cqs.end(), std::make_move_iterator(other.cqs.begin()),
             std::make_move_iterator(other.cqs.end()));
  diagnostics.insert(diagnostics.end(), other.diagnostics.begin(),
                     other.diagnostics.end());
}

std::string make_cq_id(QpKind kind, std::span<const SynsetId> synsets,
                       std::span<const MappingStatement> statements) {
  std::string id(qp_tag(kind));
  for (SynsetId s : synsets) {
    id += fmt::format("_{:08d}{}", s.offset, static_cast<char>(s.pos));
  }
  for (const auto& st : statements) {
    id += '_';
    id += st.term;
  }
  for (char& c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') c = '_';
  }
  return id;
}

namespace {

class Builder {
 public:
  Builder(const MappingTable& mapping, const OntologyIndex& index,
          const GeneratorOptions& options)
      : mapping_(mapping), index_(index), options_(options), oracle_(index, {}) {}

  // Translatable statements of a synset, one per distinct (shape, term).
  std::vector<MappingStatement> statements(SynsetId id, std::string_view role) {
    std::vector<MappingStatement> out;
    auto it = mapping_.find(id);
    if (it == mapping_.end()) {
      note(fmt::format("{} synset {} has no mapping; skipped", role, id.str()));
      return out;
    }
    for (const auto& entry : it->second) {
      try {
        MappingStatement st = translate_entry(entry, index_);
        bool seen = std::any_of(out.begin(), out.end(), [&](const auto& o) {
          return o.unary() == st.unary();
        });
        if (!seen) out.push_back(std::move(st));
      } catch (const UntranslatableEntry& e) {
        note(fmt::format("{} {}; skipped", role, e.what()));
      }
    }
    return out;
  }

  void emit(QpKind kind, std::vector<SynsetId> synsets,
            std::vector<MappingStatement> stmts, const Formula& truth) {
    if (!options_.enabled.contains(kind)) return;
    CompetencyQuestion cq;
    cq.id = make_cq_id(kind, synsets, stmts);
    if (!ids_.insert(cq.id).second) {
      note(fmt::format("duplicate question {}; skipped", cq.id));
      return;
    }
    cq.qp = kind;
    cq.synsets = std::move(synsets);
    cq.statements = std::move(stmts);
    TestPair pair = make_test_pair(truth, options_.falsity_mode);
    cq.truth = std::move(pair.truth);
    cq.falsity = std::move(pair.falsity);
    result_.cqs.push_back(std::move(cq));
  }

  void note(std::string message) {
    result_.diagnostics.push_back({Severity::kNote, std::move(message), {}});
  }

  bool strictly_below(const MappingStatement& a,
                      const MappingStatement& b) const {
    return a.unary() != b.unary() && oracle_.subsumes(a.unary(), b.unary());
  }

  GenerationResult take() { return std::move(result_); }

 private:
  const MappingTable& mapping_;
  const OntologyIndex& index_;
  const GeneratorOptions& options_;
  TaxonomyOracle oracle_;
  std::unordered_set<std::string> ids_;
  GenerationResult result_;
};

bool is_equivalence(const MappingStatement& s) {
  return s.entry.relation == MappingRelation::kEquivalence;
}

}  // namespace

GenerationResult generate_hyponymy_cqs(const SynsetStore& store,
                                       const MappingTable& mapping,
                                       const OntologyIndex& index,
                                       PartOfSpeech pos,
                                       const GeneratorOptions& options) {
  Builder b(mapping, index, options);
  const bool noun = pos == PartOfSpeech::kNoun;
  for (const auto& edge : hyponym_pairs(store, pos, options.transitive_hyponymy)) {
    auto hypos = b.statements(edge.hypo, "hyponym");
    auto hypers = b.statements(edge.hyper, "hypernym");
    for (const auto& h : hypos) {
      for (const auto& g : hypers) {
        if (h.term == g.term) continue;
        QpKind kind = is_equivalence(h)
                          ? (noun ? QpKind::kNounHypo2 : QpKind::kVerbHypo2)
                          : (noun ? QpKind::kNounHypo1 : QpKind::kVerbHypo1);
        Formula truth = build_conjecture(
            {ConjectureShape::kInclusion, false, h.unary(), g.unary(), {}});
        b.emit(kind, {edge.hypo, edge.hyper}, {h, g}, truth);
      }
    }
  }
  return b.take();
}

GenerationResult generate_antonymy_cqs(const SynsetStore& store,
                                       const MappingTable& mapping,
                                       const OntologyIndex& index,
                                       const GeneratorOptions& options) {
  Builder b(mapping, index, options);
  for (const auto& pair : antonym_pairs(store)) {
    auto lefts = b.statements(pair.a, "antonym");
    auto rights = b.statements(pair.b, "antonym");
    for (const auto& l : lefts) {
      for (const auto& r : rights) {
        if (l.term == r.term) continue;
        int equivalences = is_equivalence(l) + is_equivalence(r);
        QpKind kind = equivalences == 2   ? QpKind::kAntonym1
                      : equivalences == 1 ? QpKind::kAntonym2
                                          : QpKind::kAntonym3;
        bool left_first = true;
        if (b.strictly_below(r, l)) {
          left_first = false;
        } else if (!b.strictly_below(l, r) && equivalences == 1) {
          left_first = is_equivalence(l);
        }
        const auto& ante = left_first ? l : r;
        const auto& cons = left_first ? r : l;
        SynsetId ante_id = left_first ? pair.a : pair.b;
        SynsetId cons_id = left_first ? pair.b : pair.a;
        Formula truth = build_conjecture(
            {ConjectureShape::kExclusion, false, ante.unary(), cons.unary(), {}});
        b.emit(kind, {ante_id, cons_id}, {ante, cons}, truth);
      }
    }
  }
  return b.take();
}

GenerationResult generate_morphosemantic_cqs(std::span<const MorphLink> links,
                                             const MappingTable& mapping,
                                             const OntologyIndex& index,
                                             const GeneratorOptions& options) {
  Builder b(mapping, index, options);
  for (const auto& link : links) {
    QpKind kind = link.role == SemanticRole::kAgent ? QpKind::kMorphAgent
                  : link.role == SemanticRole::kInstrument
                      ? QpKind::kMorphInstrument
                      : QpKind::kMorphResult;
    if (!options.enabled.contains(kind)) continue;
    auto verbs = b.statements(link.verb, "verb");
    auto nouns = b.statements(link.noun, "noun");
    for (const auto& v : verbs) {
      for (const auto& n : nouns) {
        Formula truth = build_conjecture({ConjectureShape::kParticipation, false,
                                          n.unary(), v.unary(), link.role});
        b.emit(kind, {link.verb, link.noun}, {v, n}, truth);
      }
    }
  }
  return b.take();
}

GenerationResult generate_all(const SynsetStore& store,
                              std::span<const MorphLink> links,
                              const MappingTable& mapping,
                              const OntologyIndex& index,
                              const GeneratorOptions& options) {
  GenerationResult all =
      generate_hyponymy_cqs(store, mapping, index, PartOfSpeech::kNoun, options);
  all.append(
      generate_hyponymy_cqs(store, mapping, index, PartOfSpeech::kVerb, options));
  all.append(generate_antonymy_cqs(store, mapping, index, options));
  all.append(generate_morphosemantic_cqs(links, mapping, index, options));
  std::stable_sort(all.cqs.begin(), all.cqs.end(),
                   [](const auto& a, const auto& b) {
                     return qp_index(a.qp) < qp_index(b.qp);
                   });
  return all;
}

}  // namespace cqbench
