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

#include "cqbench/analytics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "cqbench/csv.h"

namespace cqbench {

std::string_view to_string(MappingQuality value) {
  switch (value) {
    case MappingQuality::kCorrectPrecise: return "CorrectPrecise";
    case MappingQuality::kOnlyCorrect: return "OnlyCorrect";
    case MappingQuality::kIncorrect: return "Incorrect";
  }
  return "Incorrect";
}

std::string_view to_string(KnowledgeQuality value) {
  switch (value) {
    case KnowledgeQuality::kCorrect: return "Correct";
    case KnowledgeQuality::kIncorrect: return "Incorrect";
    case KnowledgeQuality::kNotApplicable: return "NotApplicable";
  }
  return "NotApplicable";
}

std::string_view to_string(Entailable value) {
  switch (value) {
    case Entailable::kYes: return "Yes";
    case Entailable::kNo: return "No";
    case Entailable::kUnchecked: return "Unchecked";
  }
  return "Unchecked";
}

namespace {

template <typename Enum, size_t N>
Enum parse_enum(std::string_view text, const std::array<Enum, N>& values,
                std::string_view column, const SourceLocation& at) {
  for (Enum v : values) {
    if (text == to_string(v)) return v;
  }
  std::string allowed;
  for (Enum v : values) {
    if (!allowed.empty()) allowed += ", ";
    allowed += to_string(v);
  }
  throw ParseError(fmt::format("invalid {} '{}' (expected one of {})", column,
                               text, allowed),
                   at);
}

}  // namespace

std::vector<AnnotationRecord> parse_annotations(std::string_view csv,
                                                std::string_view source) {
  auto rows = parse_csv(csv, source);
  std::vector<AnnotationRecord> out;
  if (rows.empty()) return out;
  CsvHeader header(rows.front());
  size_t id = header.require("cq_id", source);
  size_t mapping = header.require("mapping_quality", source);
  size_t knowledge = header.require("knowledge_quality", source);
  size_t entailable = header.require("entailable", source);
  auto note = header.find("note");
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto& f = rows[r].fields;
    SourceLocation at{std::string(source), rows[r].line, 0};
    auto field = [&](size_t col) -> std::string_view {
      return col < f.size() ? trim(f[col]) : std::string_view{};
    };
    AnnotationRecord rec;
    rec.line = rows[r].line;
    rec.cq_id = std::string(field(id));
    if (rec.cq_id.empty()) throw ParseError("missing cq_id", at);
    rec.mapping = parse_enum(
        field(mapping),
        std::array{MappingQuality::kCorrectPrecise, MappingQuality::kOnlyCorrect,
                   MappingQuality::kIncorrect},
        "mapping_quality", at);
    rec.knowledge = parse_enum(
        field(knowledge),
        std::array{KnowledgeQuality::kCorrect, KnowledgeQuality::kIncorrect,
                   KnowledgeQuality::kNotApplicable},
        "knowledge_quality", at);
    rec.entailable = parse_enum(
        field(entailable),
        std::array{Entailable::kYes, Entailable::kNo, Entailable::kUnchecked},
        "entailable", at);
    if (note) rec.note = std::string(field(*note));
    out.push_back(std::move(rec));
  }
  return out;
}

size_t sample_size(size_t n, double fraction) {
  double exact = fraction * static_cast<double>(n);
  return static_cast<size_t>(std::floor(exact + 1e-9 * std::max(1.0, exact)));
}

namespace {

// Uniform draw from [0, bound) by rejection, identical on every platform.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

std::vector<size_t> sample_indices(size_t n, double fraction,
                                   std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw Error(fmt::format("sample fraction must be in (0, 1], got {}", fraction));
  }
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::mt19937_64 rng(seed);
  for (size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[bounded(rng, i)]);
  }
  order.resize(sample_size(n, fraction));
  return order;
}

std::vector<EvaluationRecord> sample_uniform(
    std::span<const EvaluationRecord> records, double fraction,
    std::uint64_t seed) {
  std::vector<EvaluationRecord> out;
  for (size_t i : sample_indices(records.size(), fraction, seed)) {
    out.push_back(records[i]);
  }
  return out;
}

std::vector<EvaluationRecord> merge_annotations(
    std::vector<EvaluationRecord> records,
    std::span<const AnnotationRecord> annotations) {
  std::map<std::string, size_t> position;
  for (size_t i = 0; i < records.size(); ++i) position[records[i].cq_id] = i;
  std::map<std::string, int> first_line;
  std::vector<std::string> problems;
  for (const auto& a : annotations) {
    auto it = position.find(a.cq_id);
    if (it == position.end()) {
      problems.push_back(
          fmt::format("line {}: unknown question id {}", a.line, a.cq_id));
      continue;
    }
    auto [seen, inserted] = first_line.emplace(a.cq_id, a.line);
    if (!inserted) {
      problems.push_back(fmt::format(
          "line {}: duplicate annotation for {} (first at line {})", a.line,
          a.cq_id, seen->second));
      continue;
    }
    auto& record = records[it->second];
    bool solved = is_solved(record.classification);
    if (!solved && a.knowledge != KnowledgeQuality::kNotApplicable) {
      problems.push_back(fmt::format(
          "line {}: knowledge label {} on unsolved question {}", a.line,
          to_string(a.knowledge), a.cq_id));
    }
    if (a.entailable != Entailable::kUnchecked &&
        (solved || a.mapping == MappingQuality::kIncorrect)) {
      problems.push_back(fmt::format(
          "line {}: entailable label {} on {} question {}", a.line,
          to_string(a.entailable), solved ? "solved" : "incorrectly mapped",
          a.cq_id));
    }
    record.annotation = a;
  }
  if (!problems.empty()) {
    std::string message = "invalid annotations:";
    for (const auto& p : problems) message += "\n  " + p;
    throw Error(message);
  }
  return records;
}

size_t QpCountTable::total() const { return stated_total.value_or(row_sum()); }

size_t QpCountTable::row_sum() const {
  return std::accumulate(counts.begin(), counts.end(), size_t{0});
}

QpCountTable published_qp_counts() {
  QpCountTable t;
  t.counts = kPublishedQpCounts;
  t.stated_total = kPublishedQpTotal;
  return t;
}

QpCountTable build_qp_count_table(std::span<const CompetencyQuestion> cqs) {
  QpCountTable t;
  for (const auto& cq : cqs) ++t.counts[qp_index(cq.qp)];
  return t;
}

QpCountTable build_qp_count_table(std::span<const QpKind> kinds) {
  QpCountTable t;
  for (QpKind k : kinds) ++t.counts[qp_index(k)];
  return t;
}

namespace {

std::string thousands(size_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

}  // namespace

std::string render_qp_counts_markdown(const QpCountTable& table,
                                      const QpCountTable* reference) {
  std::string out;
  if (reference) {
    out += "| Question Pattern | Problems | Published | Deviation |\n";
    out += "|---|---:|---:|---:|\n";
  } else {
    out += "| Question Pattern | Problems |\n";
    out += "|---|---:|\n";
  }
  auto line = [&](std::string_view label, size_t ours, size_t theirs) {
    if (!reference) {
      out += fmt::format("| {} | {} |\n", label, thousands(ours));
      return;
    }
    std::string deviation =
        theirs == 0 ? "n/a"
                    : fmt::format("{:+.1f}%", 100.0 *
                                                  (static_cast<double>(ours) -
                                                   static_cast<double>(theirs)) /
                                                  static_cast<double>(theirs));
    out += fmt::format("| {} | {} | {} | {} |\n", label, thousands(ours),
                       thousands(theirs), deviation);
  };
  for (QpKind k : kAllQpKinds) {
    line(qp_label(k), table[k], reference ? (*reference)[k] : 0);
  }
  line("Total", table.total(), reference ? reference->total() : 0);
  return out;
}

std::string render_qp_counts_csv(const QpCountTable& table) {
  std::string out = csv_line({"qp", "label", "problems"});
  for (QpKind k : kAllQpKinds) {
    out += csv_line({std::string(qp_tag(k)), std::string(qp_label(k)),
                     std::to_string(table[k])});
  }
  out += csv_line({"total", "Total", std::to_string(table.total())});
  return out;
}

namespace {

void count_mapping(MappingCounts& m, const EvaluationRecord& r) {
  if (!r.annotation) {
    ++m.unannotated;
    return;
  }
  switch (r.annotation->mapping) {
    case MappingQuality::kCorrectPrecise:
      ++m.correct;
      ++m.precise;
      break;
    case MappingQuality::kOnlyCorrect: ++m.correct; break;
    case MappingQuality::kIncorrect: ++m.incorrect; break;
  }
}

MappingCounts& operator+=(MappingCounts& a, const MappingCounts& b) {
  a.correct += b.correct;
  a.precise += b.precise;
  a.incorrect += b.incorrect;
  a.unannotated += b.unannotated;
  return a;
}

bool operator==(const MappingCounts& a, const MappingCounts& b) {
  return a.correct == b.correct && a.precise == b.precise &&
         a.incorrect == b.incorrect && a.unannotated == b.unannotated;
}

SolvedPart& operator+=(SolvedPart& a, const SolvedPart& b) {
  a.solved += b.solved;
  a.mapping += b.mapping;
  a.correct_knowledge += b.correct_knowledge;
  a.incorrect_knowledge += b.incorrect_knowledge;
  return a;
}

void add_row(AnalysisRow& total, const AnalysisRow& row) {
  total.problems += row.problems;
  total.entailed += row.entailed;
  total.incompatible += row.incompatible;
  total.conflict += row.conflict;
  total.unsolved.unsolved += row.unsolved.unsolved;
  total.unsolved.mapping += row.unsolved.mapping;
  total.total_mapping += row.total_mapping;
  total.total_correct_knowledge += row.total_correct_knowledge;
  total.total_incorrect_knowledge += row.total_incorrect_knowledge;
  total.total_unsolved += row.total_unsolved;
}

void fail_identity(const AnalysisRow& row, std::string_view what) {
  throw Error(fmt::format("analysis row '{}': {}", row.label, what));
}

void check_solved(const AnalysisRow& row, const SolvedPart& p,
                  std::string_view name) {
  if (p.solved != p.mapping.sum()) {
    fail_identity(row, fmt::format("{} S != CM + IM + unannotated", name));
  }
  if (p.mapping.precise > p.mapping.correct) {
    fail_identity(row, fmt::format("{} precise exceeds CM", name));
  }
  if (p.correct_knowledge + p.incorrect_knowledge > p.solved) {
    fail_identity(row, fmt::format("{} CK + IK exceeds S", name));
  }
}

std::string cm(const MappingCounts& m) {
  return fmt::format("{}({})", m.correct, m.precise);
}

}  // namespace

void check_identities(const AnalysisRow& row) {
  check_solved(row, row.entailed, "Entailed");
  check_solved(row, row.incompatible, "Incompatible");
  check_solved(row, row.conflict, "Conflict");
  if (row.unsolved.unsolved != row.unsolved.mapping.sum()) {
    fail_identity(row, "Unsolved U != CM + IM + unannotated");
  }
  if (row.unsolved.mapping.precise > row.unsolved.mapping.correct) {
    fail_identity(row, "Unsolved precise exceeds CM");
  }
  if (row.problems != row.entailed.solved + row.incompatible.solved +
                          row.conflict.solved + row.unsolved.unsolved) {
    fail_identity(row, "# != Entailed.S + Incompatible.S + Conflict + U");
  }
  MappingCounts mapping = row.entailed.mapping;
  mapping += row.incompatible.mapping;
  mapping += row.conflict.mapping;
  mapping += row.unsolved.mapping;
  if (!(mapping == row.total_mapping)) {
    fail_identity(row, "total mapping columns differ from the part sums");
  }
  if (row.total_mapping.sum() != row.problems) {
    fail_identity(row, "Total CM + IM + unannotated != #");
  }
  if (row.total_correct_knowledge != row.entailed.correct_knowledge +
                                         row.incompatible.correct_knowledge +
                                         row.conflict.correct_knowledge ||
      row.total_incorrect_knowledge != row.entailed.incorrect_knowledge +
                                           row.incompatible.incorrect_knowledge +
                                           row.conflict.incorrect_knowledge) {
    fail_identity(row, "total knowledge columns differ from the part sums");
  }
  if (row.total_unsolved != row.unsolved.unsolved) {
    fail_identity(row, "Total U != Unsolved U");
  }
}

AnalysisTable build_analysis_table(std::span<const EvaluationRecord> records) {
  AnalysisTable table;
  for (QpKind k : kAllQpKinds) {
    table.rows[qp_index(k)].label = std::string(qp_label(k));
  }
  table.total.label = "Total";
  for (const auto& r : records) {
    AnalysisRow& row = table.rows[qp_index(r.qp)];
    ++row.problems;
    count_mapping(row.total_mapping, r);
    if (r.classification == Classification::kUnknown) {
      ++row.unsolved.unsolved;
      ++row.total_unsolved;
      count_mapping(row.unsolved.mapping, r);
      continue;
    }
    SolvedPart& part = r.classification == Classification::kEntailed
                           ? row.entailed
                       : r.classification == Classification::kIncompatible
                           ? row.incompatible
                           : row.conflict;
    ++part.solved;
    count_mapping(part.mapping, r);
    if (r.annotation) {
      if (r.annotation->knowledge == KnowledgeQuality::kCorrect) {
        ++part.correct_knowledge;
        ++row.total_correct_knowledge;
      } else if (r.annotation->knowledge == KnowledgeQuality::kIncorrect) {
        ++part.incorrect_knowledge;
        ++row.total_incorrect_knowledge;
      }
    }
  }
  for (const auto& row : table.rows) {
    check_identities(row);
    add_row(table.total, row);
  }
  check_identities(table.total);
  return table;
}

std::string format_row_compact(const AnalysisRow& row) {
  std::vector<std::string> cells = {
      std::to_string(row.problems),
      std::to_string(row.entailed.solved),
      cm(row.entailed.mapping),
      std::to_string(row.entailed.mapping.incorrect),
      std::to_string(row.entailed.correct_knowledge),
      std::to_string(row.entailed.incorrect_knowledge),
      std::to_string(row.incompatible.solved),
      cm(row.incompatible.mapping),
      std::to_string(row.incompatible.mapping.incorrect),
      std::to_string(row.incompatible.correct_knowledge),
      std::to_string(row.incompatible.incorrect_knowledge),
      std::to_string(row.unsolved.unsolved),
      cm(row.unsolved.mapping),
      std::to_string(row.unsolved.mapping.incorrect),
      cm(row.total_mapping),
      std::to_string(row.total_mapping.incorrect),
      std::to_string(row.total_correct_knowledge),
      std::to_string(row.total_incorrect_knowledge),
      std::to_string(row.total_unsolved)};
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += " / ";
    out += cells[i];
  }
  return out;
}

std::string render_analysis_markdown(const AnalysisTable& table,
                                     const QpCountTable* corpus) {
  std::string out;
  out += "| Question Pattern | # | Entailed S | CM (P) | IM | CK | IK "
         "| Incompatible S | CM (P) | IM | CK | IK | Unsolved U | CM (P) | IM "
         "| Total CM (P) | IM | CK | IK | U | Conflict | Unannotated |\n";
  out += "|---|";
  for (int i = 0; i < 21; ++i) out += "---:|";
  out += '\n';
  auto emit = [&](const AnalysisRow& row, std::string label) {
    auto p = [](const MappingCounts& m) {
      return fmt::format("{} ({})", m.correct, m.precise);
    };
    out += fmt::format(
        "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} "
        "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
        label, row.problems, row.entailed.solved, p(row.entailed.mapping),
        row.entailed.mapping.incorrect, row.entailed.correct_knowledge,
        row.entailed.incorrect_knowledge, row.incompatible.solved,
        p(row.incompatible.mapping), row.incompatible.mapping.incorrect,
        row.incompatible.correct_knowledge, row.incompatible.incorrect_knowledge,
        row.unsolved.unsolved, p(row.unsolved.mapping),
        row.unsolved.mapping.incorrect, p(row.total_mapping),
        row.total_mapping.incorrect, row.total_correct_knowledge,
        row.total_incorrect_knowledge, row.total_unsolved, row.conflict.solved,
        row.total_mapping.unannotated);
  };
  for (QpKind k : kAllQpKinds) {
    const auto& row = table.rows[qp_index(k)];
    std::string label = row.label;
    if (corpus) label += fmt::format(" ({})", thousands((*corpus)[k]));
    emit(row, label);
  }
  std::string total = "**Total**";
  if (corpus) total = fmt::format("**Total ({})**", thousands(corpus->total()));
  emit(table.total, total);
  return out;
}

std::string render_analysis_csv(const AnalysisTable& table) {
  std::vector<std::string> header = {"qp", "problems"};
  for (std::string_view part : {"entailed", "incompatible", "conflict"}) {
    for (std::string_view col : {"s", "cm", "precise", "im", "unannotated", "ck", "ik"}) {
      header.push_back(fmt::format("{}_{}", part, col));
    }
  }
  for (std::string_view col : {"u", "cm", "precise", "im", "unannotated"}) {
    header.push_back(fmt::format("unsolved_{}", col));
  }
  for (std::string_view col :
       {"cm", "precise", "im", "unannotated", "ck", "ik", "u"}) {
    header.push_back(fmt::format("total_{}", col));
  }
  std::string out = csv_line(header);
  auto emit = [&](const AnalysisRow& row) {
    std::vector<std::string> cells = {row.label, std::to_string(row.problems)};
    auto n = [&](size_t v) { cells.push_back(std::to_string(v)); };
    for (const SolvedPart* part : {&row.entailed, &row.incompatible, &row.conflict}) {
      n(part->solved);
      n(part->mapping.correct);
      n(part->mapping.precise);
      n(part->mapping.incorrect);
      n(part->mapping.unannotated);
      n(part->correct_knowledge);
      n(part->incorrect_knowledge);
    }
    n(row.unsolved.unsolved);
    n(row.unsolved.mapping.correct);
    n(row.unsolved.mapping.precise);
    n(row.unsolved.mapping.incorrect);
    n(row.unsolved.mapping.unannotated);
    n(row.total_mapping.correct);
    n(row.total_mapping.precise);
    n(row.total_mapping.incorrect);
    n(row.total_mapping.unannotated);
    n(row.total_correct_knowledge);
    n(row.total_incorrect_knowledge);
    n(row.total_unsolved);
    out += csv_line(cells);
  };
  for (const auto& row : table.rows) emit(row);
  emit(table.total);
  return out;
}

namespace {

std::optional<UnaryStatement> statement_for(const OntologyIndex& index,
                                            const std::string& term) {
  switch (index.term_kind(term)) {
    case TermKind::kClass: return UnaryStatement{StatementShape::kInstanceOf, term};
    case TermKind::kAttribute:
      return UnaryStatement{StatementShape::kHasAttribute, term};
    case TermKind::kObjectInstance:
      return UnaryStatement{StatementShape::kEqualTo, term};
    default: return std::nullopt;
  }
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::vector<MisalignmentFinding> detect_misalignments(
    std::span<const EvaluationRecord> records, const TaxonomyOracle* oracle) {
  std::vector<MisalignmentFinding> out;
  for (const auto& r : records) {
    if (r.classification != Classification::kIncompatible) continue;
    MisalignmentFinding f;
    f.cq_id = r.cq_id;
    f.qp = r.qp;
    f.confirmed = r.annotation &&
                  r.annotation->mapping != MappingQuality::kIncorrect;
    f.synsets = r.synsets;
    f.sumo_terms = r.sumo_terms;
    if (oracle && r.sumo_terms.size() >= 2) {
      auto a = statement_for(oracle->index(), r.sumo_terms[0]);
      auto b = statement_for(oracle->index(), r.sumo_terms[1]);
      if (a && b) f.reason = oracle->explain(*a, *b);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string render_misalignments_markdown(
    std::span<const MisalignmentFinding> findings) {
  if (findings.empty()) return "No incompatible problems.\n";
  std::string out =
      "| Question | Pattern | Status | Synsets | SUMO terms | Reason |\n"
      "|---|---|---|---|---|---|\n";
  for (const auto& f : findings) {
    out += fmt::format("| {} | {} | {} | {} | {} | {} |\n", f.cq_id,
                       qp_label(f.qp), f.confirmed ? "confirmed" : "candidate",
                       join(f.synsets, ", "), join(f.sumo_terms, ", "),
                       f.reason.value_or("-"));
  }
  return out;
}

std::string render_misalignments_csv(
    std::span<const MisalignmentFinding> findings) {
  std::string out =
      csv_line({"cq_id", "qp", "status", "synsets", "sumo_terms", "reason"});
  for (const auto& f : findings) {
    out += csv_line({f.cq_id, std::string(qp_tag(f.qp)),
                     f.confirmed ? "confirmed" : "candidate",
                     join(f.synsets, ";"), join(f.sumo_terms, ";"),
                     f.reason.value_or("")});
  }
  return out;
}

}  // namespace cqbench
