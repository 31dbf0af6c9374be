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

#ifndef CQBENCH_WORDNET_H_
#define CQBENCH_WORDNET_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqbench/common.h"

namespace cqbench {

// Adjective satellites (ss_type `s`) are folded into kAdjective.
enum class PartOfSpeech : char {
  kNoun = 'n',
  kVerb = 'v',
  kAdjective = 'a',
  kAdverb = 'r',
};

std::optional<PartOfSpeech> parse_pos(char c);

struct SynsetId {
  std::uint32_t offset = 0;
  PartOfSpeech pos = PartOfSpeech::kNoun;

  // "08191230-n"
  std::string str() const;
  // Accepts "08191230-n" and "08191230n". Throws Error otherwise.
  static SynsetId parse(std::string_view text);

  friend auto operator<=>(const SynsetId&, const SynsetId&) = default;
};

struct Lemma {
  std::string word;  // as written in the data file, markers stripped
  int lex_id = 0;
};

struct Pointer {
  std::string symbol;  // "@", "@i" or "!"
  SynsetId target;
  int source_word = 0;  // 0 for synset-level pointers
  int target_word = 0;
};

struct Synset {
  SynsetId id;
  int lex_filenum = 0;
  bool satellite = false;
  std::vector<Lemma> lemmas;
  std::string gloss;
  // Only the pointer kinds consumed downstream: hypernymy and antonymy.
  std::vector<Pointer> pointers;
};

// Synsets loaded from WordNet 3.0 `data.*` files. Immutable once loaded.
class SynsetStore {
 public:
  const Synset* find(SynsetId id) const;
  bool contains(SynsetId id) const { return find(id) != nullptr; }
  size_t size() const { return synsets_.size(); }
  // Synsets in id order.
  const std::map<SynsetId, Synset>& synsets() const { return synsets_; }

  // Resolves "lemma%ss_type:lex_filenum:lex_id:head_word:head_id". The head
  // fields are ignored.
  std::optional<SynsetId> resolve_sense_key(std::string_view key) const;

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  friend SynsetStore parse_wordnet_data(std::span<const TextSource> files);

  std::map<SynsetId, Synset> synsets_;
  std::map<std::string, SynsetId, std::less<>> sense_keys_;
  std::vector<Diagnostic> diagnostics_;
};

// Parses `data.noun`, `data.verb`, `data.adj` (and optionally `data.adv`)
// contents. License lines (leading space) are skipped. Hypernym (`@`, `@i`)
// and antonym (`!`) pointers are kept; pointers to synsets that were not
// loaded are dropped with a diagnostic. Throws ParseError on a malformed
// line.
SynsetStore parse_wordnet_data(std::span<const TextSource> files);

struct HyponymEdge {
  SynsetId hypo;
  SynsetId hyper;

  friend auto operator<=>(const HyponymEdge&, const HyponymEdge&) = default;
};

// Direct hyponym pairs of one part of speech (`@i` counts as `@`), sorted by
// hypo then hyper, without duplicates. With `transitive` every
// (hypo, ancestor) pair of the hypernym closure is produced instead.
std::vector<HyponymEdge> hyponym_pairs(const SynsetStore& store,
                                       PartOfSpeech pos,
                                       bool transitive = false);

struct AntonymPair {
  SynsetId a;  // a < b
  SynsetId b;
  std::string word_a;
  std::string word_b;
};

// Lemma-level antonymy lifted to unordered synset pairs, one per pair,
// sorted by (a, b).
std::vector<AntonymPair> antonym_pairs(const SynsetStore& store);

enum class SemanticRole { kAgent, kInstrument, kResult };

std::string_view to_string(SemanticRole role);
std::optional<SemanticRole> parse_role(std::string_view name);

struct MorphLink {
  SynsetId verb;
  SynsetId noun;
  SemanticRole role;

  friend auto operator<=>(const MorphLink&, const MorphLink&) = default;
};

struct MorphLinkSet {
  std::vector<MorphLink> links;  // file order
  std::vector<Diagnostic> diagnostics;
};

// Reads morphosemantic links as CSV. With a header row the columns
// `verb_sense_key`, `relation` and `noun_sense_key` are looked up by name;
// without one the first three columns are used in that order. Rows whose
// relation is not agent/instrument/result are skipped silently; rows whose
// sense keys do not resolve are skipped with a diagnostic.
MorphLinkSet parse_morphosemantic_links(std::string_view csv,
                                        std::string_view source,
                                        const SynsetStore& store);

}  // namespace cqbench

#endif  // CQBENCH_WORDNET_H_
