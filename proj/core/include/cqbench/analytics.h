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

#ifndef CQBENCH_ANALYTICS_H_
#define CQBENCH_ANALYTICS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqbench/classification.h"
#include "cqbench/generator.h"
#include "cqbench/oracle.h"

namespace cqbench {

enum class MappingQuality { kCorrectPrecise, kOnlyCorrect, kIncorrect };
enum class KnowledgeQuality { kCorrect, kIncorrect, kNotApplicable };
enum class Entailable { kYes, kNo, kUnchecked };

std::string_view to_string(MappingQuality value);
std::string_view to_string(KnowledgeQuality value);
std::string_view to_string(Entailable value);

// Manual judgement of one question.
struct AnnotationRecord {
  std::string cq_id;
  MappingQuality mapping = MappingQuality::kIncorrect;
  KnowledgeQuality knowledge = KnowledgeQuality::kNotApplicable;
  Entailable entailable = Entailable::kUnchecked;
  std::string note;
  int line = 0;  // row in the annotation file
};

// CSV with columns cq_id, mapping_quality, knowledge_quality, entailable,
// note. Values use the enumerator spelling ("CorrectPrecise", "NotApplicable",
// "Unchecked", ...). Throws ParseError for unknown values.
std::vector<AnnotationRecord> parse_annotations(std::string_view csv,
                                                std::string_view source);

struct EvaluationRecord {
  std::string cq_id;
  QpKind qp = QpKind::kNounHypo1;
  Classification classification = Classification::kUnknown;
  std::vector<std::string> synsets;
  std::vector<std::string> sumo_terms;
  std::optional<AnnotationRecord> annotation;
};

// Floor of fraction * n.
size_t sample_size(size_t n, double fraction);

// Seeded Fisher-Yates shuffle of 0..n-1 truncated to sample_size(n,
// fraction). Throws Error unless 0 < fraction <= 1.
std::vector<size_t> sample_indices(size_t n, double fraction,
                                   std::uint64_t seed);

std::vector<EvaluationRecord> sample_uniform(
    std::span<const EvaluationRecord> records, double fraction,
    std::uint64_t seed);

// Attaches annotations by id. Throws Error listing every offending row for
// unknown ids, duplicate rows, knowledge labels on unsolved questions and
// entailability labels on solved or incorrectly mapped questions.
std::vector<EvaluationRecord> merge_annotations(
    std::vector<EvaluationRecord> records,
    std::span<const AnnotationRecord> annotations);

// Published per-pattern problem counts of the benchmark, table order.
inline constexpr std::array<size_t, 10> kPublishedQpCounts = {
    7539, 1944, 1765, 304, 91, 574, 2780, 829, 348, 788};
// The published total. The published rows add up to 16,962.
inline constexpr size_t kPublishedQpTotal = 16972;

struct QpCountTable {
  std::array<size_t, 10> counts{};
  // When set, total() returns this instead of the row sum. Only used for
  // reference tables whose printed total disagrees with their rows.
  std::optional<size_t> stated_total;

  size_t total() const;
  size_t row_sum() const;
  size_t operator[](QpKind kind) const { return counts[qp_index(kind)]; }
};

QpCountTable build_qp_count_table(std::span<const CompetencyQuestion> cqs);
QpCountTable build_qp_count_table(std::span<const QpKind> kinds);
// kPublishedQpCounts with kPublishedQpTotal as the stated total.
QpCountTable published_qp_counts();

// With `reference`, adds reference and relative-deviation columns.
std::string render_qp_counts_markdown(const QpCountTable& table,
                                      const QpCountTable* reference = nullptr);
std::string render_qp_counts_csv(const QpCountTable& table);

struct MappingCounts {
  size_t correct = 0;  // includes precise
  size_t precise = 0;
  size_t incorrect = 0;
  size_t unannotated = 0;

  size_t sum() const { return correct + incorrect + unannotated; }
};

struct SolvedPart {
  size_t solved = 0;
  MappingCounts mapping;
  size_t correct_knowledge = 0;
  size_t incorrect_knowledge = 0;
};

struct UnsolvedPart {
  size_t unsolved = 0;
  MappingCounts mapping;
};

struct AnalysisRow {
  std::string label;
  size_t problems = 0;
  SolvedPart entailed;
  SolvedPart incompatible;
  SolvedPart conflict;  // both tests proved; not part of the published layout
  UnsolvedPart unsolved;
  MappingCounts total_mapping;
  size_t total_correct_knowledge = 0;
  size_t total_incorrect_knowledge = 0;
  size_t total_unsolved = 0;
};

struct AnalysisTable {
  std::array<AnalysisRow, 10> rows;
  AnalysisRow total;
};

// Throws Error when a bookkeeping identity fails.
void check_identities(const AnalysisRow& row);

// Per-pattern and total rows. Records without an annotation are counted in
// the unannotated buckets.
AnalysisTable build_analysis_table(std::span<const EvaluationRecord> records);

// "# / S / CM(P) / IM / CK / IK / S / CM(P) / IM / CK / IK / U / CM(P) / IM /
//  CM(P) / IM / CK / IK / U", the published column layout.
std::string format_row_compact(const AnalysisRow& row);

std::string render_analysis_markdown(const AnalysisTable& table,
                                     const QpCountTable* corpus = nullptr);
std::string render_analysis_csv(const AnalysisTable& table);

struct MisalignmentFinding {
  std::string cq_id;
  QpKind qp = QpKind::kNounHypo1;
  bool confirmed = false;  // annotated with a correct mapping
  std::vector<std::string> synsets;
  std::vector<std::string> sumo_terms;
  std::optional<std::string> reason;
};

// One finding per Incompatible record, in record order. With an oracle, the
// taxonomic reason between the first two terms is attached when one exists.
std::vector<MisalignmentFinding> detect_misalignments(
    std::span<const EvaluationRecord> records,
    const TaxonomyOracle* oracle = nullptr);

std::string render_misalignments_markdown(
    std::span<const MisalignmentFinding> findings);
std::string render_misalignments_csv(
    std::span<const MisalignmentFinding> findings);

}  // namespace cqbench

#endif  // CQBENCH_ANALYTICS_H_
