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

// Command-line driver: generate, classify, report, sample.
//
// Options come from a TOML/INI config file (--config or $CQBENCH_CONFIG)
// and the command line; the command line wins. All output goes to files in
// the output directory, progress and diagnostics to stderr.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "cqbench/common.h"
#include "pipeline.h"

namespace {

using cqbench::pipeline::ClassifyMode;
using cqbench::pipeline::RunConfig;

std::map<std::string, cqbench::QpKind> qp_choices() {
  std::map<std::string, cqbench::QpKind> out;
  for (auto kind : cqbench::kAllQpKinds) {
    out.emplace(std::string(cqbench::qp_tag(kind)), kind);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Competency-question benchmark over WordNet and SUMO"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI configuration file")
      ->envname("CQBENCH_CONFIG");

  RunConfig config;
  std::vector<std::string> kif_files;
  std::vector<std::string> patterns;
  std::string falsity = "complement";
  std::string unknown_suffix = "error";

  app.add_option("--wordnet-dir", config.wordnet_dir,
                 "Directory with data.noun, data.verb and data.adj");
  app.add_option("--mapping-dir", config.mapping_dir,
                 "Directory with WordNetMappings30-*.txt");
  app.add_option("--morphosemantic", config.morphosemantic_csv,
                 "Morphosemantic links as CSV");
  app.add_option("--kif", kif_files, "SUO-KIF ontology files");
  app.add_option("--axioms", config.axiom_file,
                 "First-order axiom file included by every problem");
  app.add_option("--bridges", config.bridge_csv, "Bridge axiom CSV");
  app.add_option("--annotations", config.annotations_csv,
                 "Manual annotation CSV");
  app.add_option("-o,--output-dir", config.output_dir, "Output directory")
      ->capture_default_str();
  app.add_option("--prover-command", config.prover.command_template,
                 "Prover command; {problem}, {cpu_limit}, {mem_limit} are "
                 "substituted");
  app.add_option("--time-limit", config.prover.time_limit_s,
                 "Seconds per prover run")
      ->capture_default_str();
  app.add_option("--memory-limit", config.prover.memory_limit_mb,
                 "Megabytes per prover run, passed as {mem_limit}")
      ->capture_default_str();
  app.add_option("-j,--workers", config.prover.workers,
                 "Concurrent prover runs")
      ->capture_default_str();
  app.add_option("--grace", config.prover.grace_period_s,
                 "Seconds past the time limit before a run is killed")
      ->capture_default_str();
  app.add_option("--symbol-prefix", config.tptp.symbol_prefix,
                 "Prefix of predicates and constants in the axiom file");
  app.add_option("--falsity-mode", falsity, "complement or negation")
      ->check(CLI::IsMember({"complement", "negation"}))
      ->capture_default_str();
  app.add_option("--unknown-suffix", unknown_suffix,
                 "Unknown mapping suffix: error or skip")
      ->check(CLI::IsMember({"error", "skip"}))
      ->capture_default_str();
  app.add_option("--patterns", patterns, "Enabled question patterns")
      ->check(CLI::IsMember(qp_choices()))
      ->delimiter(',');
  app.add_flag("--transitive-hyponymy", config.transitive_hyponymy,
               "Use every hypernym ancestor, not only direct ones");
  app.add_option("--sample-fraction", config.sample_fraction,
                 "Fraction of questions sampled for manual analysis")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Sampling seed")->capture_default_str();
  app.add_flag("--sample-only", config.report_sample_only,
               "Report over the sampled questions only");
  app.add_flag("-v,--verbose", config.verbose, "Print notes and progress");

  auto* generate = app.add_subcommand("generate", "Write the question corpus");
  auto* classify = app.add_subcommand("classify", "Classify every question");
  std::string mode = "oracle";
  classify->add_option("--mode", mode, "oracle, prover or both")
      ->check(CLI::IsMember({"oracle", "prover", "both"}))
      ->capture_default_str();
  auto* report = app.add_subcommand("report", "Write the analysis reports");
  auto* sample = app.add_subcommand("sample", "Write the sample manifest");
  for (auto* sub : {generate, classify, report, sample}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  for (const auto& f : kif_files) config.kif_files.emplace_back(f);
  config.falsity_mode = *cqbench::parse_falsity_mode(falsity);
  config.unknown_suffix = unknown_suffix == "skip"
                              ? cqbench::UnknownSuffixPolicy::kSkip
                              : cqbench::UnknownSuffixPolicy::kError;
  if (!patterns.empty()) {
    config.enabled.clear();
    for (const auto& p : patterns) config.enabled.insert(*cqbench::parse_qp(p));
  }

  namespace pl = cqbench::pipeline;
  std::ostream& log = std::cerr;
  try {
    if (*generate) {
      auto summary = pl::cmd_generate(config, log);
      log << fmt::format("generate: {} questions, {} warnings, written to {}\n",
                         summary.questions, summary.warnings,
                         config.output_dir.string());
    } else if (*classify) {
      auto summary =
          pl::cmd_classify(config, *pl::parse_classify_mode(mode), log);
      size_t n = std::max(summary.oracle.size(), summary.prover.size());
      log << fmt::format("classify: {} questions", n);
      if (!summary.prover.empty()) {
        log << fmt::format(", {} reused from checkpoint, {} prover errors",
                           summary.reused, summary.prover_errors);
      }
      if (mode == "both") {
        log << fmt::format(", {} disagreements", summary.disagreements.size());
      }
      log << '\n';
      if (summary.prover_errors > 0) return 1;
    } else if (*report) {
      auto summary = pl::cmd_report(config, log);
      log << fmt::format("report: {} questions, {} incompatible findings\n",
                         summary.records, summary.misalignments.size());
    } else if (*sample) {
      pl::cmd_sample(config, log);
    }
  } catch (const cqbench::Error& e) {
    log << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
