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

#include "cqbench/wordnet.h"

#include <gtest/gtest.h>

#include "support.h"

namespace cqbench {
namespace {

using testing::fixture_world;

SynsetId noun(std::uint32_t offset) { return {offset, PartOfSpeech::kNoun}; }
SynsetId verb(std::uint32_t offset) { return {offset, PartOfSpeech::kVerb}; }
SynsetId adj(std::uint32_t offset) { return {offset, PartOfSpeech::kAdjective}; }

SynsetStore store_of(std::string_view name, std::string_view text) {
  std::vector<TextSource> files{{std::string(name), std::string(text)}};
  return parse_wordnet_data(files);
}

TEST(SynsetIdTest, FormatsAndParses) {
  EXPECT_EQ(noun(8191230).str(), "08191230-n");
  EXPECT_EQ(SynsetId::parse("08191230-n"), noun(8191230));
  EXPECT_EQ(SynsetId::parse("01247240a"), adj(1247240));
  EXPECT_EQ(SynsetId::parse("01249724-s"), adj(1249724));
  EXPECT_THROW(SynsetId::parse("x8191230-n"), Error);
  EXPECT_THROW(SynsetId::parse("08191230-q"), Error);
  EXPECT_THROW(SynsetId::parse(""), Error);
}

TEST(WordnetTest, LoadsFixtureSynsets) {
  const auto& store = fixture_world().store;
  EXPECT_EQ(store.size(), 15u + 6u + 5u);
  const Synset* army = store.find(noun(8191230));
  ASSERT_NE(army, nullptr);
  EXPECT_EQ(army->lex_filenum, 14);
  ASSERT_EQ(army->lemmas.size(), 1u);
  EXPECT_EQ(army->lemmas[0].word, "army");
  EXPECT_EQ(army->gloss, "a permanent force that fights on land");
  ASSERT_EQ(army->pointers.size(), 1u);
  EXPECT_EQ(army->pointers[0].symbol, "@");
  EXPECT_EQ(army->pointers[0].target, noun(8198398));

  const Synset* service = store.find(noun(8198398));
  ASSERT_NE(service, nullptr);
  EXPECT_EQ(service->lemmas.size(), 2u);
  EXPECT_EQ(service->lemmas[1].word, "military_service");
}

TEST(WordnetTest, SatelliteFoldsIntoAdjectiveAndMarkerIsStripped) {
  const Synset* tepid = fixture_world().store.find(adj(1249724));
  ASSERT_NE(tepid, nullptr);
  EXPECT_TRUE(tepid->satellite);
  EXPECT_EQ(tepid->lemmas[0].word, "tepid");
  // The similar-to pointer is not kept.
  EXPECT_TRUE(tepid->pointers.empty());
}

TEST(WordnetTest, AntonymPointersKeepWordNumbers) {
  const Synset* carry = fixture_world().store.find(verb(2082690));
  ASSERT_NE(carry, nullptr);
  ASSERT_EQ(carry->pointers.size(), 1u);
  EXPECT_EQ(carry->pointers[0].symbol, "!");
  EXPECT_EQ(carry->pointers[0].source_word, 1);
  EXPECT_EQ(carry->pointers[0].target_word, 1);
}

TEST(WordnetTest, ResolvesSenseKeys) {
  const auto& store = fixture_world().store;
  EXPECT_EQ(store.resolve_sense_key("machine%1:06:00::"), noun(3699975));
  EXPECT_EQ(store.resolve_sense_key("machine%2:36:00::"), verb(1614925));
  EXPECT_EQ(store.resolve_sense_key("Cook%1:18:00::"), noun(9939313));
  EXPECT_EQ(store.resolve_sense_key("tepid%5:00:00:hot:00"), adj(1249724));
  EXPECT_FALSE(store.resolve_sense_key("machine%1:07:00::").has_value());
  EXPECT_FALSE(store.resolve_sense_key("garbage").has_value());
}

TEST(WordnetTest, DirectHyponymPairs) {
  auto pairs = hyponym_pairs(fixture_world().store, PartOfSpeech::kNoun);
  std::vector<HyponymEdge> expected = {
      {noun(841628), noun(831191)},     {noun(3699975), noun(3183080)},
      {noun(3702248), noun(3699975)},   {noun(8191230), noun(8198398)},
      {noun(9247410), noun(34213)},     {noun(10399491), noun(10235549)},
      {noun(11450566), noun(11449907)},
  };
  EXPECT_EQ(pairs, expected);
  auto verbs = hyponym_pairs(fixture_world().store, PartOfSpeech::kVerb);
  EXPECT_EQ(verbs, (std::vector<HyponymEdge>{{verb(1664172), verb(1617192)}}));
}

TEST(WordnetTest, TransitiveHyponymPairs) {
  auto pairs =
      hyponym_pairs(fixture_world().store, PartOfSpeech::kNoun, true);
  EXPECT_EQ(pairs.size(), 8u);
  EXPECT_NE(std::find(pairs.begin(), pairs.end(),
                      HyponymEdge{noun(3702248), noun(3183080)}),
            pairs.end());
}

TEST(WordnetTest, InstanceHypernymCountsAsHypernym) {
  auto store = store_of("data.noun",
                        "00000001 03 n 01 city 0 000 | a town\n"
                        "00000002 15 n 01 paris 0 001 @i 00000001 n 0000 | a city\n");
  auto pairs = hyponym_pairs(store, PartOfSpeech::kNoun);
  EXPECT_EQ(pairs, (std::vector<HyponymEdge>{{noun(2), noun(1)}}));
}

TEST(WordnetTest, AntonymPairsAreDeduplicated) {
  auto pairs = antonym_pairs(fixture_world().store);
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(pairs[0].a, adj(1247240));
  EXPECT_EQ(pairs[0].b, adj(1251128));
  EXPECT_EQ(pairs[1].a, adj(1483324));
  EXPECT_EQ(pairs[1].b, adj(1484083));
  EXPECT_EQ(pairs[2].a, verb(2082690));
  EXPECT_EQ(pairs[2].b, verb(2085898));
  EXPECT_EQ(pairs[2].word_a, "carry_away");
  EXPECT_EQ(pairs[2].word_b, "fetch");
}

TEST(WordnetTest, DanglingPointerIsDroppedWithDiagnostic) {
  auto store = store_of("data.noun",
                        "00000001 03 n 01 a 0 001 @ 09999999 n 0000 | x\n");
  EXPECT_TRUE(store.find(noun(1))->pointers.empty());
  EXPECT_EQ(store.diagnostics().size(), 1u);
}

TEST(WordnetTest, MalformedLineIsAParseError) {
  EXPECT_THROW(store_of("data.noun", "00000001 03 n 01 a 0 | short\n"),
               ParseError);
  EXPECT_THROW(store_of("data.noun", "0000000x 03 n 01 a 0 000 | x\n"),
               ParseError);
  EXPECT_THROW(store_of("data.noun", "00000001 03 q 01 a 0 000 | x\n"),
               ParseError);
}

TEST(WordnetTest, HexadecimalWordCount) {
  std::string line = "00000001 03 n 0b";
  for (int i = 0; i < 11; ++i) line += " w" + std::to_string(i) + " 0";
  line += " 000 | eleven words\n";
  auto store = store_of("data.noun", line);
  EXPECT_EQ(store.find(noun(1))->lemmas.size(), 11u);
}

TEST(MorphosemanticTest, KeepsOnlyTheThreeRoles) {
  const auto& links = fixture_world().links;
  ASSERT_EQ(links.links.size(), 3u);
  EXPECT_EQ(links.links[0],
            (MorphLink{verb(1614925), noun(3699975), SemanticRole::kInstrument}));
  EXPECT_EQ(links.links[1],
            (MorphLink{verb(1664172), noun(9939313), SemanticRole::kAgent}));
  EXPECT_EQ(links.links[2],
            (MorphLink{verb(1259458), noun(937656), SemanticRole::kResult}));
  EXPECT_TRUE(links.diagnostics.empty());
}

TEST(MorphosemanticTest, UnresolvedKeysAreReported) {
  const auto& store = fixture_world().store;
  auto set = parse_morphosemantic_links(
      "machine%2:36:00::,instrument,nothing%1:06:00::\n"
      "cook%2:36:00::,agent,cook%1:18:00::\n",
      "inline.csv", store);
  EXPECT_EQ(set.links.size(), 1u);
  EXPECT_EQ(set.diagnostics.size(), 1u);
}

TEST(MorphosemanticTest, RoleNames) {
  EXPECT_EQ(parse_role("agent"), SemanticRole::kAgent);
  EXPECT_EQ(parse_role("result"), SemanticRole::kResult);
  EXPECT_FALSE(parse_role("event").has_value());
  EXPECT_EQ(to_string(SemanticRole::kInstrument), "instrument");
}

}  // namespace
}  // namespace cqbench
