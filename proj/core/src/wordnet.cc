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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include <fmt/format.h>

#include "cqbench/csv.h"

namespace cqbench {

std::optional<PartOfSpeech> parse_pos(char c) {
  switch (c) {
    case 'n': return PartOfSpeech::kNoun;
    case 'v': return PartOfSpeech::kVerb;
    case 'a':
    case 's': return PartOfSpeech::kAdjective;
    case 'r': return PartOfSpeech::kAdverb;
    default: return std::nullopt;
  }
}

std::string SynsetId::str() const {
  return fmt::format("{:08d}-{}", offset, static_cast<char>(pos));
}

SynsetId SynsetId::parse(std::string_view text) {
  std::string_view digits = text;
  char pos_char = 0;
  if (text.size() >= 2 && text[text.size() - 2] == '-') {
    digits = text.substr(0, text.size() - 2);
    pos_char = text.back();
  } else if (!text.empty()) {
    digits = text.substr(0, text.size() - 1);
    pos_char = text.back();
  }
  auto pos = parse_pos(pos_char);
  std::uint32_t offset = 0;
  auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), offset);
  if (!pos || digits.empty() || ec != std::errc() ||
      end != digits.data() + digits.size()) {
    throw Error(fmt::format("invalid synset id '{}'", text));
  }
  return SynsetId{offset, *pos};
}

namespace {

char ss_type_digit(PartOfSpeech pos, bool satellite) {
  switch (pos) {
    case PartOfSpeech::kNoun: return '1';
    case PartOfSpeech::kVerb: return '2';
    case PartOfSpeech::kAdjective: return satellite ? '5' : '3';
    case PartOfSpeech::kAdverb: return '4';
  }
  return '0';
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string sense_key_stem(std::string_view lemma, char ss_type, int lex_filenum,
                           int lex_id) {
  return fmt::format("{}%{}:{:02d}:{:02d}", lowercase(lemma), ss_type,
                     lex_filenum, lex_id);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

class DataLineParser {
 public:
  DataLineParser(std::string_view line, SourceLocation at)
      : at_(std::move(at)) {
    size_t bar = line.find('|');
    if (bar != std::string_view::npos) {
      gloss_ = std::string(trim(line.substr(bar + 1)));
      line = line.substr(0, bar);
    }
    tokens_ = split_ws(line);
  }

  Synset parse() {
    Synset s;
    s.id.offset = number<std::uint32_t>(10, "synset offset");
    s.lex_filenum = number<int>(10, "lex_filenum");
    std::string_view ss_type = next("ss_type");
    auto pos = ss_type.size() == 1 ? parse_pos(ss_type[0]) : std::nullopt;
    if (!pos) fail(fmt::format("invalid ss_type '{}'", ss_type));
    s.id.pos = *pos;
    s.satellite = ss_type == "s";
    int w_cnt = number<int>(16, "w_cnt");
    for (int i = 0; i < w_cnt; ++i) {
      std::string_view word = next("word");
      if (auto paren = word.find('('); paren != std::string_view::npos &&
                                       word.back() == ')') {
        word = word.substr(0, paren);
      }
      s.lemmas.push_back({std::string(word), number<int>(16, "lex_id")});
    }
    int p_cnt = number<int>(10, "p_cnt");
    for (int i = 0; i < p_cnt; ++i) {
      std::string_view symbol = next("pointer symbol");
      std::uint32_t target = number<std::uint32_t>(10, "pointer offset");
      std::string_view target_pos = next("pointer pos");
      std::string_view words = next("pointer source/target");
      auto tpos = target_pos.size() == 1 ? parse_pos(target_pos[0])
                                          : std::nullopt;
      if (!tpos) fail(fmt::format("invalid pointer pos '{}'", target_pos));
      if (words.size() != 4) fail(fmt::format("invalid source/target '{}'", words));
      if (symbol != "@" && symbol != "@i" && symbol != "!") continue;
      Pointer p;
      p.symbol = std::string(symbol);
      p.target = SynsetId{target, *tpos};
      p.source_word = hex(words.substr(0, 2));
      p.target_word = hex(words.substr(2, 2));
      s.pointers.push_back(std::move(p));
    }
    s.gloss = std::move(gloss_);
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, at_);
  }

  std::string_view next(std::string_view what) {
    if (pos_ >= tokens_.size()) fail(fmt::format("missing {}", what));
    return tokens_[pos_++];
  }

  int hex(std::string_view s) const {
    int value = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value, 16);
    if (ec != std::errc() || end != s.data() + s.size()) {
      fail(fmt::format("invalid hex field '{}'", s));
    }
    return value;
  }

  template <typename T>
  T number(int base, std::string_view what) {
    std::string_view s = next(what);
    T value{};
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value, base);
    if (ec != std::errc() || end != s.data() + s.size()) {
      fail(fmt::format("invalid {} '{}'", what, s));
    }
    return value;
  }

  SourceLocation at_;
  std::vector<std::string_view> tokens_;
  size_t pos_ = 0;
  std::string gloss_;
};

const std::string& lemma_word(const Synset& s, int index) {
  size_t i = index > 0 ? static_cast<size_t>(index - 1) : 0;
  if (i >= s.lemmas.size()) i = 0;
  return s.lemmas[i].word;
}

}  // namespace

const Synset* SynsetStore::find(SynsetId id) const {
  auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

std::optional<SynsetId> SynsetStore::resolve_sense_key(
    std::string_view key) const {
  size_t percent = key.find('%');
  if (percent == std::string_view::npos) return std::nullopt;
  std::string_view lemma = key.substr(0, percent);
  std::string_view rest = key.substr(percent + 1);
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t colon = rest.find(':', start);
    fields.push_back(rest.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (fields.size() < 3 || fields[0].size() != 1) return std::nullopt;
  int lex_filenum = 0;
  int lex_id = 0;
  auto parse_int = [](std::string_view s, int& out) {
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && end == s.data() + s.size();
  };
  if (!parse_int(fields[1], lex_filenum) || !parse_int(fields[2], lex_id)) {
    return std::nullopt;
  }
  auto it = sense_keys_.find(
      sense_key_stem(lemma, fields[0][0], lex_filenum, lex_id));
  if (it == sense_keys_.end()) return std::nullopt;
  return it->second;
}

SynsetStore parse_wordnet_data(std::span<const TextSource> files) {
  SynsetStore store;
  for (const auto& file : files) {
    int line_no = 0;
    for (std::string_view line : split_lines(file.content)) {
      ++line_no;
      if (line.empty() || line[0] == ' ') continue;
      Synset s = DataLineParser(line, {file.name, line_no, 0}).parse();
      if (store.synsets_.contains(s.id)) {
        store.diagnostics_.push_back(
            {Severity::kWarning,
             fmt::format("duplicate synset {}; keeping the first", s.id.str()),
             {file.name, line_no, 0}});
        continue;
      }
      char ss = ss_type_digit(s.id.pos, s.satellite);
      for (const auto& lemma : s.lemmas) {
        store.sense_keys_.emplace(
            sense_key_stem(lemma.word, ss, s.lex_filenum, lemma.lex_id), s.id);
      }
      store.synsets_.emplace(s.id, std::move(s));
    }
  }

  for (auto& [id, synset] : store.synsets_) {
    auto& ptrs = synset.pointers;
    auto dangling = [&](const Pointer& p) {
      if (store.synsets_.contains(p.target)) return false;
      store.diagnostics_.push_back(
          {Severity::kNote,
           fmt::format("{}: dropping '{}' pointer to unloaded synset {}",
                       id.str(), p.symbol, p.target.str()),
           {}});
      return true;
    };
    ptrs.erase(std::remove_if(ptrs.begin(), ptrs.end(), dangling), ptrs.end());
  }
  return store;
}

std::vector<HyponymEdge> hyponym_pairs(const SynsetStore& store,
                                       PartOfSpeech pos, bool transitive) {
  std::vector<HyponymEdge> edges;
  auto direct = [&](const Synset& s) {
    std::vector<SynsetId> up;
    for (const auto& p : s.pointers) {
      if ((p.symbol == "@" || p.symbol == "@i") && p.target.pos == pos) {
        up.push_back(p.target);
      }
    }
    return up;
  };

  for (const auto& [id, synset] : store.synsets()) {
    if (id.pos != pos) continue;
    if (!transitive) {
      for (SynsetId hyper : direct(synset)) edges.push_back({id, hyper});
      continue;
    }
    std::set<SynsetId> seen;
    std::vector<SynsetId> frontier = direct(synset);
    while (!frontier.empty()) {
      SynsetId next = frontier.back();
      frontier.pop_back();
      if (next == id || !seen.insert(next).second) continue;
      edges.push_back({id, next});
      if (const Synset* up = store.find(next)) {
        for (SynsetId h : direct(*up)) frontier.push_back(h);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<AntonymPair> antonym_pairs(const SynsetStore& store) {
  std::map<std::pair<SynsetId, SynsetId>, AntonymPair> pairs;
  for (const auto& [id, synset] : store.synsets()) {
    for (const auto& p : synset.pointers) {
      if (p.symbol != "!" || p.target == id) continue;
      const Synset* other = store.find(p.target);
      if (other == nullptr) continue;
      const std::string& here = lemma_word(synset, p.source_word);
      const std::string& there = lemma_word(*other, p.target_word);
      AntonymPair pair = id < p.target
                             ? AntonymPair{id, p.target, here, there}
                             : AntonymPair{p.target, id, there, here};
      pairs.try_emplace({pair.a, pair.b}, std::move(pair));
    }
  }
  std::vector<AntonymPair> out;
  out.reserve(pairs.size());
  for (auto& [key, pair] : pairs) out.push_back(std::move(pair));
  return out;
}

std::string_view to_string(SemanticRole role) {
  switch (role) {
    case SemanticRole::kAgent: return "agent";
    case SemanticRole::kInstrument: return "instrument";
    case SemanticRole::kResult: return "result";
  }
  return "agent";
}

std::optional<SemanticRole> parse_role(std::string_view name) {
  std::string lower = lowercase(trim(name));
  if (lower == "agent") return SemanticRole::kAgent;
  if (lower == "instrument") return SemanticRole::kInstrument;
  if (lower == "result") return SemanticRole::kResult;
  return std::nullopt;
}

MorphLinkSet parse_morphosemantic_links(std::string_view csv,
                                        std::string_view source,
                                        const SynsetStore& store) {
  MorphLinkSet out;
  auto rows = parse_csv(csv, source);
  if (rows.empty()) return out;

  size_t verb_col = 0, rel_col = 1, noun_col = 2;
  size_t first = 0;
  const auto& head = rows.front().fields;
  bool has_header = std::any_of(head.begin(), head.end(), [](const auto& f) {
    return lowercase(trim(f)) == "relation";
  });
  if (has_header) {
    CsvHeader header(rows.front());
    verb_col = header.require("verb_sense_key", source);
    rel_col = header.require("relation", source);
    noun_col = header.require("noun_sense_key", source);
    first = 1;
  }
  size_t width = std::max({verb_col, rel_col, noun_col}) + 1;

  for (size_t r = first; r < rows.size(); ++r) {
    const auto& row = rows[r];
    SourceLocation at{std::string(source), row.line, 0};
    if (row.fields.size() < width) {
      out.diagnostics.push_back(
          {Severity::kWarning,
           fmt::format("expected at least {} fields, got {}", width,
                       row.fields.size()),
           at});
      continue;
    }
    auto role = parse_role(row.fields[rel_col]);
    if (!role) continue;
    std::string_view verb_key = trim(row.fields[verb_col]);
    std::string_view noun_key = trim(row.fields[noun_col]);
    auto verb = store.resolve_sense_key(verb_key);
    auto noun = store.resolve_sense_key(noun_key);
    std::string problem;
    if (!verb) {
      problem = fmt::format("unresolved sense key '{}'", verb_key);
    } else if (verb->pos != PartOfSpeech::kVerb) {
      problem = fmt::format("'{}' is not a verb sense", verb_key);
    } else if (!noun) {
      problem = fmt::format("unresolved sense key '{}'", noun_key);
    } else if (noun->pos != PartOfSpeech::kNoun) {
      problem = fmt::format("'{}' is not a noun sense", noun_key);
    }
    if (!problem.empty()) {
      out.diagnostics.push_back({Severity::kWarning, problem + "; row dropped", at});
      continue;
    }
    out.links.push_back({*verb, *noun, *role});
  }
  return out;
}

}  // namespace cqbench
