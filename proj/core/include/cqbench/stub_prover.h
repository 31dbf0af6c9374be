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

#ifndef CQBENCH_STUB_PROVER_H_
#define CQBENCH_STUB_PROVER_H_

#include <filesystem>
#include <string>
#include <vector>

#include "cqbench/kif.h"
#include "cqbench/oracle.h"
#include "cqbench/tptp.h"

namespace cqbench {

// Taxonomic content of a TPTP axiom set.
struct TaxonomyTheory {
  // Ground taxonomy facts rewritten as SUO-KIF, ready for build_index.
  std::vector<KifExpr> facts;
  // Axioms with the bridge shape.
  std::vector<BridgeAxiom> bridges;
  // Axioms that are neither; ignored by the stub.
  size_t ignored = 0;
};

TaxonomyTheory extract_theory(const std::vector<tptp::AnnotatedFormula>& axioms,
                              const TptpOptions& options = {});

struct StubProverOptions {
  TptpOptions tptp;
  // Searched for include files after the problem's own directory.
  std::vector<std::filesystem::path> include_dirs;
};

// Deterministic stand-in for an ATP. Loads the problem and its includes,
// decides the conjecture with TaxonomyOracle and returns the prover output:
//   % SZS status Theorem for <problem>
// Theorem when the oracle proves the conjecture, CounterSatisfiable when it
// proves the complement of a conjecture with a non-vacuous antecedent,
// GaveUp otherwise.
std::string run_stub_prover(const std::filesystem::path& problem,
                            const StubProverOptions& options = {});

}  // namespace cqbench

#endif  // CQBENCH_STUB_PROVER_H_
