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

#ifndef CQBENCH_TOOLS_PIPELINE_H_
#define CQBENCH_TOOLS_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cqbench/analytics.h"
#include "cqbench/corpus.h"
#include "cqbench/formula.h"
#include "cqbench/generator.h"
#include "cqbench/mapping.h"
#include "cqbench/prover.h"
#include "cqbench/tptp.h"

namespace cqbench::pipeline {

namespace fs = std::filesystem;

// Everything one invocation of the driver needs. Paths may be relative to
// the working directory.
struct RunConfig {
  // Directory holding data.noun, data.verb and data.adj.
  fs::path wordnet_dir;
  // Directory holding WordNetMappings30-{noun,verb,adj}.txt.
  fs::path mapping_dir;
  // Optional; without it the morphosemantic patterns produce nothing.
  fs::path morphosemantic_csv;
  std::vector<fs::path> kif_files;
  // First-order axiom bundle named by every problem's include directive.
  fs::path axiom_file;
  fs::path bridge_csv;
  fs::path annotations_csv;
  fs::path output_dir = "cqbench-out";

  ProverConfig prover;
  TptpOptions tptp;
  FalsityMode falsity_mode = FalsityMode::kComplement;
  UnknownSuffixPolicy unknown_suffix = UnknownSuffixPolicy::kError;
  std::set<QpKind> enabled{kAllQpKinds.begin(), kAllQpKinds.end()};
  bool transitive_hyponymy = false;

  double sample_fraction = 0.01;
  std::uint64_t seed = 0;
  // Restricts the report to the sampled questions.
  bool report_sample_only = false;
  // Prints notes as well as warnings.
  bool verbose = false;
};

enum class Command { kGenerate, kClassify, kReport, kSample };
std::string_view to_string(Command command);

enum class ClassifyMode { kOracle, kProver, kBoth };
std::string_view to_string(ClassifyMode mode);
std::optional<ClassifyMode> parse_classify_mode(std::string_view text);

// Throws Error naming every missing input the command needs.
void validate(const RunConfig& config, Command command,
              ClassifyMode mode = ClassifyMode::kOracle);

// Files under the output directory.
struct OutputLayout {
  fs::path root;
  fs::path manifest() const { return root / "manifest.csv"; }
  fs::path problems() const { return root / "problems"; }
  fs::path qp_counts_md() const { return root / "qp_counts.md"; }
  fs::path qp_counts_csv() const { return root / "qp_counts.csv"; }
  fs::path results(ClassifyMode engine) const;
  fs::path checkpoint() const { return root / "checkpoint.jsonl"; }
  fs::path disagreements() const { return root / "disagreements.csv"; }
  fs::path analysis_md() const { return root / "analysis.md"; }
  fs::path analysis_csv() const { return root / "analysis.csv"; }
  fs::path misalignments_md() const { return root / "misalignments.md"; }
  fs::path misalignments_csv() const { return root / "misalignments.csv"; }
  fs::path sample_manifest() const { return root / "sample_manifest.csv"; }
  fs::path stamp(Command command) const;
};

struct GenerateSummary {
  size_t questions = 0;
  QpCountTable counts;
  size_t warnings = 0;
};

// Loads the resources, generates every enabled question and writes the
// problem files, the manifest and the pattern count tables.
GenerateSummary cmd_generate(const RunConfig& config, std::ostream& log);

struct Disagreement {
  std::string cq_id;
  std::string qp;
  Classification oracle = Classification::kUnknown;
  Classification prover = Classification::kUnknown;
  // Set when the oracle solved the question; an unsolved oracle answer is
  // expected incompleteness.
  bool flagged = false;
};

struct ClassifySummary {
  std::vector<ResultRow> oracle;
  std::vector<ResultRow> prover;
  std::vector<Disagreement> disagreements;
  size_t prover_errors = 0;
  size_t reused = 0;
};

// Classifies every manifest question with the chosen engine(s). The oracle
// reads the conjectures back from the problem files.
ClassifySummary cmd_classify(const RunConfig& config, ClassifyMode mode,
                             std::ostream& log);

std::vector<Disagreement> find_disagreements(
    const std::vector<ResultRow>& oracle, const std::vector<ResultRow>& prover);
std::string format_disagreements(const std::vector<Disagreement>& rows);

// Writes the sample manifest and returns the sampled rows in manifest order.
std::vector<ManifestRow> cmd_sample(const RunConfig& config, std::ostream& log);

struct ReportSummary {
  AnalysisTable analysis;
  std::vector<MisalignmentFinding> misalignments;
  size_t records = 0;
};

// Joins the manifest with the prover results (the oracle results when the
// prover was not run) and the annotations, then writes the count, analysis
// and misalignment reports and the sample manifest.
ReportSummary cmd_report(const RunConfig& config, std::ostream& log);

// Canonical JSON of the configuration; the stamp hashes this text.
std::string config_json(const RunConfig& config);
std::string sha256_hex(std::string_view data);
std::string sha256_file(const fs::path& path);
// Writes stamp-<command>.json with the configuration hash, the digest of
// every input file the configuration names and the seed.
void write_stamp(const RunConfig& config, Command command);

}  // namespace cqbench::pipeline

#endif  // CQBENCH_TOOLS_PIPELINE_H_
