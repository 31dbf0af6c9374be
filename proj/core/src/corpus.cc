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

#include "cqbench/corpus.h"

#include <set>

#include <fmt/format.h>

#include "cqbench/csv.h"

namespace cqbench {

namespace {

constexpr std::string_view kColumns[] = {"cq_id",     "qp",
                                         "synsets",   "sumo_terms",
                                         "relations", "truth_file",
                                         "falsity_file"};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ';';
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  size_t start = 0;
  while (true) {
    size_t semi = text.find(';', start);
    out.emplace_back(text.substr(start, semi - start));
    if (semi == std::string_view::npos) return out;
    start = semi + 1;
  }
}

}  // namespace

ManifestRow manifest_row(const CompetencyQuestion& cq) {
  ManifestRow row;
  row.cq_id = cq.id;
  row.qp = cq.qp;
  for (SynsetId s : cq.synsets) row.synsets.push_back(s.str());
  for (const auto& st : cq.statements) {
    row.sumo_terms.push_back(st.term);
    row.relations.emplace_back(1, symbol(st.entry.relation));
  }
  row.truth_file = cq.id + "_truth.p";
  row.falsity_file = cq.id + "_falsity.p";
  return row;
}

std::string format_manifest(std::span<const ManifestRow> rows) {
  std::string out =
      csv_line(std::vector<std::string>(std::begin(kColumns), std::end(kColumns)));
  for (const auto& r : rows) {
    out += csv_line({r.cq_id, std::string(qp_tag(r.qp)), join(r.synsets),
                     join(r.sumo_terms), join(r.relations), r.truth_file,
                     r.falsity_file});
  }
  return out;
}

std::vector<ManifestRow> parse_manifest(std::string_view csv,
                                        std::string_view source) {
  auto records = parse_csv(csv, source);
  if (records.empty()) throw ParseError("empty manifest", {std::string(source), 1, 0});
  CsvHeader header(records.front());
  size_t cols[std::size(kColumns)];
  for (size_t i = 0; i < std::size(kColumns); ++i) {
    cols[i] = header.require(kColumns[i], source);
  }
  std::vector<ManifestRow> rows;
  for (size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r].fields;
    SourceLocation at{std::string(source), records[r].line, 0};
    if (f.size() < std::size(kColumns)) {
      throw ParseError(fmt::format("expected {} fields, got {}",
                                   std::size(kColumns), f.size()),
                       at);
    }
    ManifestRow row;
    row.cq_id = f[cols[0]];
    auto qp = parse_qp(f[cols[1]]);
    if (!qp) throw ParseError(fmt::format("unknown pattern '{}'", f[cols[1]]), at);
    row.qp = *qp;
    row.synsets = split(f[cols[2]]);
    row.sumo_terms = split(f[cols[3]]);
    row.relations = split(f[cols[4]]);
    row.truth_file = f[cols[5]];
    row.falsity_file = f[cols[6]];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ManifestRow> read_manifest(const std::filesystem::path& path) {
  TextSource src = read_text_file(path);
  return parse_manifest(src.content, src.name);
}

void write_manifest(const std::filesystem::path& path,
                    std::span<const ManifestRow> rows) {
  write_file_atomically(path, format_manifest(rows));
}

std::vector<ManifestRow> write_corpus(std::span<const CompetencyQuestion> cqs,
                                      const std::filesystem::path& problem_dir,
                                      const std::filesystem::path& manifest_dir,
                                      std::string_view axiom_file_name,
                                      const TptpOptions& options) {
  std::set<std::string> ids;
  for (const auto& cq : cqs) {
    if (!ids.insert(cq.id).second) {
      throw Error(fmt::format("duplicate question id {}", cq.id));
    }
  }
  std::filesystem::create_directories(problem_dir);
  std::vector<ManifestRow> rows;
  rows.reserve(cqs.size());
  for (const auto& cq : cqs) {
    TptpDocumentPair docs = emit_tptp(cq, axiom_file_name, options);
    ManifestRow row = manifest_row(cq);
    auto truth = problem_dir / (docs.truth.name + ".p");
    auto falsity = problem_dir / (docs.falsity.name + ".p");
    write_file_atomically(truth, docs.truth.text);
    write_file_atomically(falsity, docs.falsity.text);
    row.truth_file = truth.lexically_relative(manifest_dir).generic_string();
    row.falsity_file = falsity.lexically_relative(manifest_dir).generic_string();
    if (row.truth_file.empty()) row.truth_file = truth.generic_string();
    if (row.falsity_file.empty()) row.falsity_file = falsity.generic_string();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cqbench
