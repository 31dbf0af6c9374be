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

#include "pipeline.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "cqbench/classification.h"
#include "cqbench/csv.h"
#include "cqbench/kif.h"
#include "cqbench/oracle.h"
#include "cqbench/wordnet.h"

namespace cqbench::pipeline {

namespace {

constexpr std::array<std::string_view, 3> kWordnetFiles = {
    "data.noun", "data.verb", "data.adj"};
constexpr std::array<std::string_view, 3> kMappingFiles = {
    "WordNetMappings30-noun.txt", "WordNetMappings30-verb.txt",
    "WordNetMappings30-adj.txt"};

size_t report_diagnostics(std::ostream& log, std::string_view stage,
                          const std::vector<Diagnostic>& diagnostics,
                          bool verbose) {
  size_t warnings = 0;
  size_t notes = 0;
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::kWarning) {
      ++warnings;
      log << stage << ": " << d.str() << '\n';
    } else {
      ++notes;
      if (verbose) log << stage << ": " << d.str() << '\n';
    }
  }
  if (notes > 0 && !verbose) {
    log << fmt::format("{}: {} notes (use --verbose to list them)\n", stage,
                       notes);
  }
  return warnings;
}

std::vector<TextSource> read_all(const fs::path& dir,
                                 std::span<const std::string_view> names) {
  std::vector<TextSource> sources;
  for (auto name : names) sources.push_back(read_text_file(dir / name));
  return sources;
}

OntologyIndex load_index(const RunConfig& config, std::ostream& log,
                         size_t* warnings) {
  std::vector<KifExpr> exprs;
  for (const auto& file : config.kif_files) {
    TextSource src = read_text_file(file);
    auto parsed = parse_kif(src.content, src.name);
    exprs.insert(exprs.end(), std::make_move_iterator(parsed.begin()),
                 std::make_move_iterator(parsed.end()));
  }
  OntologyIndex index = build_index(exprs);
  size_t w = report_diagnostics(log, "ontology", index.diagnostics(),
                                config.verbose);
  if (warnings != nullptr) *warnings += w;
  return index;
}

std::vector<BridgeAxiom> load_bridges(const RunConfig& config) {
  if (config.bridge_csv.empty()) return {};
  TextSource src = read_text_file(config.bridge_csv);
  return parse_bridge_axioms(src.content, src.name);
}

std::vector<ResultRow> read_results(const fs::path& path) {
  TextSource src = read_text_file(path);
  return parse_results(src.content, src.name);
}

void write_results(const fs::path& path, const std::vector<ResultRow>& rows) {
  write_file_atomically(path, format_results(rows));
}

Formula read_conjecture(const fs::path& path, const TptpOptions& options) {
  TextSource src = read_text_file(path);
  tptp::Problem problem = tptp::parse_problem(src.content, src.name);
  const tptp::AnnotatedFormula* found = nullptr;
  for (const auto& f : problem.formulas) {
    if (f.role != "conjecture") continue;
    if (found != nullptr) {
      throw Error(fmt::format("{}: more than one conjecture", src.name));
    }
    found = &f;
  }
  if (found == nullptr) throw Error(fmt::format("{}: no conjecture", src.name));
  return from_fof(found->formula, options);
}

std::string oracle_szs(bool proved) { return proved ? "Theorem" : "GaveUp"; }

std::vector<ResultRow> classify_with_oracle(
    const RunConfig& config, const std::vector<ManifestRow>& rows,
    std::ostream& log) {
  OntologyIndex index = load_index(config, log, nullptr);
  TaxonomyOracle oracle(index, load_bridges(config));
  const fs::path root = config.output_dir;
  std::vector<ResultRow> results;
  results.reserve(rows.size());
  for (const auto& row : rows) {
    Formula truth = read_conjecture(root / row.truth_file, config.tptp);
    Formula falsity = read_conjecture(root / row.falsity_file, config.tptp);
    bool t = oracle.proves(truth);
    bool f = oracle.proves(falsity);
    ResultRow r;
    r.cq_id = row.cq_id;
    r.qp = std::string(qp_tag(row.qp));
    r.truth_szs = oracle_szs(t);
    r.falsity_szs = oracle_szs(f);
    r.classification = classify(t, f);
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<ResultRow> classify_with_prover(
    const RunConfig& config, const std::vector<ManifestRow>& rows,
    const OutputLayout& out, std::ostream& log, ClassifySummary& summary) {
  std::vector<ProblemPair> pairs;
  pairs.reserve(rows.size());
  for (const auto& row : rows) {
    pairs.push_back({row.cq_id, fs::absolute(out.root / row.truth_file),
                     fs::absolute(out.root / row.falsity_file)});
  }
  ScheduleOptions options;
  options.checkpoint = out.checkpoint();
  size_t done = 0;
  options.on_outcome = [&](const TestOutcome& outcome) {
    ++done;
    if (!outcome.error.empty()) {
      log << fmt::format("prover: {}: {}\n", outcome.cq_id, outcome.error);
    } else if (config.verbose) {
      log << fmt::format("prover: [{}/{}] {} {}\n", done, rows.size(),
                         outcome.cq_id, to_string(outcome.classification));
    }
  };
  ScheduleResult result = schedule(pairs, config.prover, options);
  summary.reused = result.reused;
  std::vector<ResultRow> results;
  results.reserve(result.outcomes.size());
  for (size_t i = 0; i < result.outcomes.size(); ++i) {
    const auto& outcome = result.outcomes[i];
    if (!outcome.error.empty()) ++summary.prover_errors;
    results.push_back(result_row(outcome, std::string(qp_tag(rows[i].qp))));
  }
  return results;
}

std::vector<EvaluationRecord> join_records(
    const std::vector<ManifestRow>& rows,
    const std::vector<ResultRow>& results) {
  std::map<std::string, const ResultRow*, std::less<>> by_id;
  for (const auto& r : results) {
    if (!by_id.emplace(r.cq_id, &r).second) {
      throw Error(fmt::format("results list '{}' twice", r.cq_id));
    }
  }
  std::vector<EvaluationRecord> records;
  std::vector<std::string> missing;
  for (const auto& row : rows) {
    auto it = by_id.find(row.cq_id);
    if (it == by_id.end()) {
      missing.push_back(row.cq_id);
      continue;
    }
    EvaluationRecord rec;
    rec.cq_id = row.cq_id;
    rec.qp = row.qp;
    rec.classification = it->second->classification;
    rec.synsets = row.synsets;
    rec.sumo_terms = row.sumo_terms;
    records.push_back(std::move(rec));
    by_id.erase(it);
  }
  if (!missing.empty()) {
    throw Error(fmt::format("{} questions have no result, first '{}'",
                            missing.size(), missing.front()));
  }
  if (!by_id.empty()) {
    throw Error(fmt::format("{} results name questions outside the manifest, "
                            "first '{}'",
                            by_id.size(), by_id.begin()->first));
  }
  return records;
}

std::vector<size_t> sampled_rows(const RunConfig& config, size_t n) {
  auto indices = sample_indices(n, config.sample_fraction, config.seed);
  std::sort(indices.begin(), indices.end());
  return indices;
}

void add_digest(nlohmann::ordered_json& resources, const fs::path& path) {
  if (path.empty() || !fs::is_regular_file(path)) return;
  resources.push_back({{"path", path.string()}, {"sha256", sha256_file(path)}});
}

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::kGenerate: return "generate";
    case Command::kClassify: return "classify";
    case Command::kReport: return "report";
    case Command::kSample: return "sample";
  }
  return "?";
}

std::string_view to_string(ClassifyMode mode) {
  switch (mode) {
    case ClassifyMode::kOracle: return "oracle";
    case ClassifyMode::kProver: return "prover";
    case ClassifyMode::kBoth: return "both";
  }
  return "?";
}

std::optional<ClassifyMode> parse_classify_mode(std::string_view text) {
  for (auto m : {ClassifyMode::kOracle, ClassifyMode::kProver,
                 ClassifyMode::kBoth}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

fs::path OutputLayout::results(ClassifyMode engine) const {
  return root / fmt::format("results_{}.csv", to_string(engine));
}

fs::path OutputLayout::stamp(Command command) const {
  return root / fmt::format("stamp-{}.json", to_string(command));
}

void validate(const RunConfig& config, Command command, ClassifyMode mode) {
  std::vector<std::string> problems;
  auto need_file = [&](const fs::path& p, std::string_view what) {
    if (p.empty()) {
      problems.push_back(fmt::format("{} is not set", what));
    } else if (!fs::is_regular_file(p)) {
      problems.push_back(fmt::format("{} '{}' does not exist", what, p.string()));
    }
  };
  auto optional_file = [&](const fs::path& p, std::string_view what) {
    if (!p.empty()) need_file(p, what);
  };
  auto need_kif = [&] {
    if (config.kif_files.empty()) problems.push_back("no SUO-KIF file given");
    for (const auto& f : config.kif_files) need_file(f, "SUO-KIF file");
  };
  if (config.output_dir.empty()) problems.push_back("output dir is not set");

  switch (command) {
    case Command::kGenerate:
      if (config.wordnet_dir.empty()) {
        problems.push_back("WordNet dir is not set");
      } else {
        for (auto f : kWordnetFiles) need_file(config.wordnet_dir / f, "WordNet file");
      }
      if (config.mapping_dir.empty()) {
        problems.push_back("mapping dir is not set");
      } else {
        for (auto f : kMappingFiles) need_file(config.mapping_dir / f, "mapping file");
      }
      optional_file(config.morphosemantic_csv, "morphosemantic CSV");
      need_kif();
      if (config.axiom_file.empty()) problems.push_back("axiom file is not set");
      break;
    case Command::kClassify:
      need_file(OutputLayout{config.output_dir}.manifest(), "manifest");
      if (mode != ClassifyMode::kProver) {
        need_kif();
        optional_file(config.bridge_csv, "bridge axiom CSV");
      }
      if (mode != ClassifyMode::kOracle) {
        need_file(config.axiom_file, "axiom file");
        if (config.prover.command_template.empty()) {
          problems.push_back("prover command is not set");
        }
        try {
          config.prover.validate();
        } catch (const Error& e) {
          problems.push_back(e.what());
        }
      }
      break;
    case Command::kReport:
      need_file(OutputLayout{config.output_dir}.manifest(), "manifest");
      optional_file(config.annotations_csv, "annotation file");
      for (const auto& f : config.kif_files) need_file(f, "SUO-KIF file");
      optional_file(config.bridge_csv, "bridge axiom CSV");
      break;
    case Command::kSample:
      need_file(OutputLayout{config.output_dir}.manifest(), "manifest");
      break;
  }
  if (command == Command::kSample || command == Command::kReport) {
    if (!(config.sample_fraction > 0.0 && config.sample_fraction <= 1.0)) {
      problems.push_back(fmt::format("sample fraction {} is outside (0, 1]",
                                     config.sample_fraction));
    }
  }
  if (!problems.empty()) {
    std::string message = fmt::format("invalid configuration for {}:",
                                      to_string(command));
    for (const auto& p : problems) message += "\n  " + p;
    throw Error(message);
  }
}

GenerateSummary cmd_generate(const RunConfig& config, std::ostream& log) {
  validate(config, Command::kGenerate);
  GenerateSummary summary;

  auto wn_sources = read_all(config.wordnet_dir, kWordnetFiles);
  SynsetStore store = parse_wordnet_data(wn_sources);
  summary.warnings +=
      report_diagnostics(log, "wordnet", store.diagnostics(), config.verbose);

  auto map_sources = read_all(config.mapping_dir, kMappingFiles);
  MappingParseResult mapping = parse_mapping(map_sources, config.unknown_suffix);
  summary.warnings +=
      report_diagnostics(log, "mapping", mapping.diagnostics, config.verbose);

  MorphLinkSet links;
  if (!config.morphosemantic_csv.empty()) {
    TextSource src = read_text_file(config.morphosemantic_csv);
    links = parse_morphosemantic_links(src.content, src.name, store);
    summary.warnings += report_diagnostics(log, "morphosemantic",
                                           links.diagnostics, config.verbose);
  }

  OntologyIndex index = load_index(config, log, &summary.warnings);

  GeneratorOptions options;
  options.falsity_mode = config.falsity_mode;
  options.enabled = config.enabled;
  options.transitive_hyponymy = config.transitive_hyponymy;
  GenerationResult generated =
      generate_all(store, links.links, mapping.table, index, options);
  summary.warnings += report_diagnostics(log, "generator",
                                         generated.diagnostics, config.verbose);

  OutputLayout out{config.output_dir};
  fs::create_directories(out.problems());
  for (const auto& entry : fs::directory_iterator(out.problems())) {
    if (entry.is_regular_file() && entry.path().extension() == ".p") {
      fs::remove(entry.path());
    }
  }
  std::string axiom = fs::absolute(config.axiom_file).lexically_normal().string();
  auto rows = write_corpus(generated.cqs, out.problems(), out.root, axiom,
                           config.tptp);
  write_manifest(out.manifest(), rows);

  summary.questions = generated.cqs.size();
  summary.counts = build_qp_count_table(generated.cqs);
  QpCountTable published = published_qp_counts();
  write_file_atomically(out.qp_counts_md(),
                        render_qp_counts_markdown(summary.counts, &published));
  write_file_atomically(out.qp_counts_csv(),
                        render_qp_counts_csv(summary.counts));
  write_stamp(config, Command::kGenerate);
  return summary;
}

std::vector<Disagreement> find_disagreements(
    const std::vector<ResultRow>& oracle,
    const std::vector<ResultRow>& prover) {
  std::map<std::string, const ResultRow*, std::less<>> by_id;
  for (const auto& r : prover) by_id.emplace(r.cq_id, &r);
  std::vector<Disagreement> out;
  for (const auto& o : oracle) {
    auto it = by_id.find(o.cq_id);
    if (it == by_id.end()) continue;
    if (it->second->classification == o.classification) continue;
    out.push_back({o.cq_id, o.qp, o.classification,
                   it->second->classification, is_solved(o.classification)});
  }
  return out;
}

std::string format_disagreements(const std::vector<Disagreement>& rows) {
  std::string out = "cq_id,qp,oracle,prover,flagged\n";
  for (const auto& d : rows) {
    out += csv_line({d.cq_id, d.qp, std::string(to_string(d.oracle)),
                     std::string(to_string(d.prover)),
                     d.flagged ? "yes" : "no"});
  }
  return out;
}

ClassifySummary cmd_classify(const RunConfig& config, ClassifyMode mode,
                             std::ostream& log) {
  validate(config, Command::kClassify, mode);
  OutputLayout out{config.output_dir};
  auto rows = read_manifest(out.manifest());
  ClassifySummary summary;
  if (mode != ClassifyMode::kProver) {
    summary.oracle = classify_with_oracle(config, rows, log);
    write_results(out.results(ClassifyMode::kOracle), summary.oracle);
  }
  if (mode != ClassifyMode::kOracle) {
    summary.prover = classify_with_prover(config, rows, out, log, summary);
    write_results(out.results(ClassifyMode::kProver), summary.prover);
  }
  if (mode == ClassifyMode::kBoth) {
    summary.disagreements = find_disagreements(summary.oracle, summary.prover);
    write_file_atomically(out.disagreements(),
                          format_disagreements(summary.disagreements));
    size_t flagged = std::count_if(
        summary.disagreements.begin(), summary.disagreements.end(),
        [](const Disagreement& d) { return d.flagged; });
    if (flagged > 0) {
      log << fmt::format(
          "classify: {} questions solved by the oracle got a different "
          "prover answer, see {}\n",
          flagged, out.disagreements().string());
    }
  }
  write_stamp(config, Command::kClassify);
  return summary;
}

std::vector<ManifestRow> cmd_sample(const RunConfig& config, std::ostream& log) {
  validate(config, Command::kSample);
  OutputLayout out{config.output_dir};
  auto rows = read_manifest(out.manifest());
  std::vector<ManifestRow> sample;
  for (size_t i : sampled_rows(config, rows.size())) sample.push_back(rows[i]);
  write_manifest(out.sample_manifest(), sample);
  log << fmt::format("sample: {} of {} questions\n", sample.size(), rows.size());
  write_stamp(config, Command::kSample);
  return sample;
}

ReportSummary cmd_report(const RunConfig& config, std::ostream& log) {
  validate(config, Command::kReport);
  OutputLayout out{config.output_dir};
  auto rows = read_manifest(out.manifest());

  fs::path results_path = out.results(ClassifyMode::kProver);
  if (!fs::is_regular_file(results_path)) {
    results_path = out.results(ClassifyMode::kOracle);
  }
  if (!fs::is_regular_file(results_path)) {
    throw Error("no results found; run classify first");
  }
  log << fmt::format("report: using {}\n", results_path.string());
  auto records = join_records(rows, read_results(results_path));

  if (!config.annotations_csv.empty()) {
    TextSource src = read_text_file(config.annotations_csv);
    records = merge_annotations(std::move(records),
                                parse_annotations(src.content, src.name));
  }

  std::vector<ManifestRow> sample;
  std::vector<EvaluationRecord> sampled_records;
  for (size_t i : sampled_rows(config, rows.size())) {
    sample.push_back(rows[i]);
    sampled_records.push_back(records[i]);
  }
  write_manifest(out.sample_manifest(), sample);
  if (config.report_sample_only) records = std::move(sampled_records);

  std::vector<QpKind> kinds;
  for (const auto& row : rows) kinds.push_back(row.qp);
  QpCountTable counts = build_qp_count_table(kinds);
  QpCountTable published = published_qp_counts();
  write_file_atomically(out.qp_counts_md(),
                        render_qp_counts_markdown(counts, &published));
  write_file_atomically(out.qp_counts_csv(), render_qp_counts_csv(counts));

  ReportSummary summary;
  summary.records = records.size();
  summary.analysis = build_analysis_table(records);
  write_file_atomically(out.analysis_md(),
                        render_analysis_markdown(summary.analysis, &counts));
  write_file_atomically(out.analysis_csv(),
                        render_analysis_csv(summary.analysis));

  std::optional<OntologyIndex> index;
  std::unique_ptr<TaxonomyOracle> oracle;
  if (!config.kif_files.empty()) {
    index = load_index(config, log, nullptr);
    oracle = std::make_unique<TaxonomyOracle>(*index, load_bridges(config));
  }
  summary.misalignments = detect_misalignments(records, oracle.get());
  write_file_atomically(out.misalignments_md(),
                        render_misalignments_markdown(summary.misalignments));
  write_file_atomically(out.misalignments_csv(),
                        render_misalignments_csv(summary.misalignments));
  write_stamp(config, Command::kReport);
  return summary;
}

std::string config_json(const RunConfig& config) {
  nlohmann::ordered_json j;
  j["wordnet_dir"] = config.wordnet_dir.string();
  j["mapping_dir"] = config.mapping_dir.string();
  j["morphosemantic_csv"] = config.morphosemantic_csv.string();
  auto kif = nlohmann::ordered_json::array();
  for (const auto& f : config.kif_files) kif.push_back(f.string());
  j["kif_files"] = kif;
  j["axiom_file"] = config.axiom_file.string();
  j["bridge_csv"] = config.bridge_csv.string();
  j["annotations_csv"] = config.annotations_csv.string();
  j["output_dir"] = config.output_dir.string();
  j["prover"] = {{"command", config.prover.command_template},
                 {"time_limit_s", config.prover.time_limit_s},
                 {"memory_limit_mb", config.prover.memory_limit_mb},
                 {"workers", config.prover.workers},
                 {"grace_period_s", config.prover.grace_period_s}};
  j["symbol_prefix"] = config.tptp.symbol_prefix;
  j["falsity_mode"] = std::string(to_string(config.falsity_mode));
  j["unknown_suffix"] =
      config.unknown_suffix == UnknownSuffixPolicy::kError ? "error" : "skip";
  auto qps = nlohmann::ordered_json::array();
  for (auto kind : kAllQpKinds) {
    if (config.enabled.count(kind)) qps.push_back(std::string(qp_tag(kind)));
  }
  j["patterns"] = qps;
  j["transitive_hyponymy"] = config.transitive_hyponymy;
  j["sample_fraction"] = config.sample_fraction;
  j["seed"] = config.seed;
  j["report_sample_only"] = config.report_sample_only;
  return j.dump(2);
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
  return hex;
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open '{}'", path.string()));
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                             &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  std::array<char, 1 << 16> buffer{};
  while (in) {
    in.read(buffer.data(), buffer.size());
    if (in.gcount() > 0 &&
        EVP_DigestUpdate(ctx.get(), buffer.data(),
                         static_cast<size_t>(in.gcount())) != 1) {
      throw Error("SHA-256 failed");
    }
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1) {
    throw Error("SHA-256 failed");
  }
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
  return hex;
}

void write_stamp(const RunConfig& config, Command command) {
  std::string cfg = config_json(config);
  nlohmann::ordered_json stamp;
  stamp["command"] = std::string(to_string(command));
  stamp["config_sha256"] = sha256_hex(cfg);
  stamp["seed"] = config.seed;
  auto resources = nlohmann::ordered_json::array();
  if (!config.wordnet_dir.empty()) {
    for (auto f : kWordnetFiles) add_digest(resources, config.wordnet_dir / f);
  }
  if (!config.mapping_dir.empty()) {
    for (auto f : kMappingFiles) add_digest(resources, config.mapping_dir / f);
  }
  add_digest(resources, config.morphosemantic_csv);
  for (const auto& f : config.kif_files) add_digest(resources, f);
  add_digest(resources, config.axiom_file);
  add_digest(resources, config.bridge_csv);
  add_digest(resources, config.annotations_csv);
  stamp["resources"] = resources;
  stamp["config"] = nlohmann::ordered_json::parse(cfg);
  OutputLayout out{config.output_dir};
  fs::create_directories(out.root);
  write_file_atomically(out.stamp(command), stamp.dump(2) + "\n");
}

}  // namespace cqbench::pipeline
