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

#ifndef CQBENCH_CORPUS_H_
#define CQBENCH_CORPUS_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqbench/generator.h"
#include "cqbench/tptp.h"

namespace cqbench {

// One manifest row per competency question. Multi-valued columns are joined
// with ';' and aligned with each other.
struct ManifestRow {
  std::string cq_id;
  QpKind qp = QpKind::kNounHypo1;
  std::vector<std::string> synsets;
  std::vector<std::string> sumo_terms;
  std::vector<std::string> relations;  // "=", "+" or "@"
  std::string truth_file;              // relative to the manifest directory
  std::string falsity_file;
};

ManifestRow manifest_row(const CompetencyQuestion& cq);

std::string format_manifest(std::span<const ManifestRow> rows);
std::vector<ManifestRow> parse_manifest(std::string_view csv,
                                        std::string_view source);

std::vector<ManifestRow> read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path,
                    std::span<const ManifestRow> rows);

// Writes two problem files per question into `problem_dir` and returns the
// manifest rows with paths relative to `manifest_dir`. Throws Error when two
// questions share an id.
std::vector<ManifestRow> write_corpus(
    std::span<const CompetencyQuestion> cqs,
    const std::filesystem::path& problem_dir,
    const std::filesystem::path& manifest_dir,
    std::string_view axiom_file_name, const TptpOptions& options = {});

}  // namespace cqbench

#endif  // CQBENCH_CORPUS_H_
