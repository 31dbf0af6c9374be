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

// Deterministic stand-in for a first-order prover. Prints one SZS status
// line for a TPTP problem, decided over the problem's taxonomy facts.

#include <chrono>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cqbench/stub_prover.h"

int main(int argc, char** argv) {
  CLI::App app{"Taxonomy-only stand-in for a TPTP prover"};
  std::string problem;
  std::vector<std::string> include_dirs;
  std::string prefix;
  int sleep_ms = 0;
  app.add_option("problem", problem, "TPTP problem file")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("-I,--include-dir", include_dirs,
                 "Directory searched for included axiom files");
  app.add_option("--prefix", prefix, "Symbol prefix used by the axiom set");
  app.add_option("--sleep-ms", sleep_ms, "Delay before answering")
      ->check(CLI::NonNegativeNumber);
  CLI11_PARSE(app, argc, argv);

  if (sleep_ms > 0) {
    std::this_thread::sleep_for(std::chrono::milliseconds(sleep_ms));
  }
  try {
    cqbench::StubProverOptions options;
    options.tptp.symbol_prefix = prefix;
    for (const auto& dir : include_dirs) options.include_dirs.emplace_back(dir);
    std::cout << cqbench::run_stub_prover(problem, options) << std::flush;
  } catch (const std::exception& e) {
    std::cerr << "stub prover: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
