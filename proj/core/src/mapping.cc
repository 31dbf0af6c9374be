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

#include "cqbench/mapping.h"

#include <cctype>
#include <charconv>

#include <fmt/format.h>

namespace cqbench {

std::optional<MappingRelation> parse_mapping_relation(char symbol) {
  switch (symbol) {
    case '=': return MappingRelation::kEquivalence;
    case '+': return MappingRelation::kSubsumption;
    case '@': return MappingRelation::kInstantiation;
    default: return std::nullopt;
  }
}

char symbol(MappingRelation relation) { return static_cast<char>(relation); }

std::string format_annotation(const MappingEntry& entry) {
  return fmt::format("&%{}{}", entry.sumo_term, symbol(entry.relation));
}

namespace {

bool is_term_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

// Offset and ss_type are the first and third fields of a data line.
SynsetId line_synset(std::string_view line, const SourceLocation& at) {
  std::string_view fields[3];
  size_t i = 0;
  for (auto& field : fields) {
    while (i < line.size() && line[i] == ' ') ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    field = line.substr(start, i - start);
  }
  std::uint32_t offset = 0;
  auto [end, ec] = std::from_chars(
      fields[0].data(), fields[0].data() + fields[0].size(), offset);
  auto pos = fields[2].size() == 1 ? parse_pos(fields[2][0]) : std::nullopt;
  if (ec != std::errc() || end != fields[0].data() + fields[0].size() ||
      fields[0].empty() || !pos) {
    throw ParseError("mapping line does not start with a synset offset and "
                     "ss_type",
                     at);
  }
  return SynsetId{offset, *pos};
}

}  // namespace

MappingParseResult parse_mapping(std::span<const TextSource> files,
                                 UnknownSuffixPolicy policy) {
  MappingParseResult out;
  for (const auto& file : files) {
    int line_no = 0;
    for (std::string_view line : split_lines(file.content)) {
      ++line_no;
      if (line.empty() || line[0] == ';' || line[0] == ' ') continue;
      SourceLocation at{file.name, line_no, 0};
      SynsetId id = line_synset(line, at);
      bool annotated = false;
      for (size_t p = line.find("&%"); p != std::string_view::npos;
           p = line.find("&%", p + 2)) {
        size_t start = p + 2;
        size_t end = start;
        while (end < line.size() && is_term_char(line[end])) ++end;
        SourceLocation here{file.name, line_no, static_cast<int>(p) + 1};
        std::string_view term = line.substr(start, end - start);
        auto relation = end < line.size() && !term.empty()
                            ? parse_mapping_relation(line[end])
                            : std::nullopt;
        if (!relation) {
          std::string suffix =
              end < line.size() ? std::string(1, line[end]) : "end of line";
          std::string message = fmt::format(
              "annotation '&%{}' has unknown suffix '{}'", term, suffix);
          if (policy == UnknownSuffixPolicy::kError) {
            throw ParseError(message, here);
          }
          out.diagnostics.push_back({Severity::kWarning, message, here});
          continue;
        }
        out.table[id].push_back({id, std::string(term), *relation});
        annotated = true;
      }
      if (!annotated) {
        out.diagnostics.push_back(
            {Severity::kNote,
             fmt::format("no mapping annotation for {}; skipped", id.str()),
             at});
      }
    }
  }
  return out;
}

std::string_view to_string(StatementShape shape) {
  switch (shape) {
    case StatementShape::kInstanceOf: return "InstanceOf";
    case StatementShape::kHasAttribute: return "HasAttribute";
    case StatementShape::kEqualTo: return "EqualTo";
  }
  return "InstanceOf";
}

UntranslatableEntry::UntranslatableEntry(const MappingEntry& entry,
                                         TermKind kind)
    : Error(fmt::format("{} {}: SUMO term '{}' of kind {} has no statement "
                        "form",
                        entry.synset.str(), format_annotation(entry),
                        entry.sumo_term, to_string(kind))),
      entry_(entry),
      kind_(kind) {}

MappingStatement translate_entry(const MappingEntry& entry,
                                 const OntologyIndex& index) {
  TermKind kind = index.term_kind(entry.sumo_term);
  switch (kind) {
    case TermKind::kClass:
      return {StatementShape::kInstanceOf, entry.sumo_term, entry};
    case TermKind::kAttribute:
      return {StatementShape::kHasAttribute, entry.sumo_term, entry};
    case TermKind::kObjectInstance:
      return {StatementShape::kEqualTo, entry.sumo_term, entry};
    case TermKind::kRelation:
    case TermKind::kUnknown:
      break;
  }
  throw UntranslatableEntry(entry, kind);
}

}  // namespace cqbench
