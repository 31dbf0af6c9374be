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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "cqbench/kif.h"
#include "cqbench/oracle.h"
#include "synthetic.h"

namespace cqbench::bench {
namespace {

void BM_OracleClassify(benchmark::State& state) {
  auto index = build_index(parse_kif(tree_kif(5000), "tree.kif"));
  TaxonomyOracle oracle(index, {});
  std::vector<Formula> truths, falsities;
  for (int i = 4; i < 5000; i += 37) {
    UnaryStatement a{StatementShape::kInstanceOf, "T" + std::to_string(i)};
    UnaryStatement b{StatementShape::kInstanceOf, "T" + std::to_string(i / 3 + 1)};
    ConjectureView view;
    view.shape = ConjectureShape::kInclusion;
    view.antecedent = a;
    view.consequent = b;
    Formula truth = build_conjecture(view);
    truths.push_back(truth);
    falsities.push_back(complement(truth));
  }
  size_t i = 0;
  for (auto _ : state) {
    size_t k = i++ % truths.size();
    benchmark::DoNotOptimize(oracle.classify(truths[k], falsities[k]));
  }
}
BENCHMARK(BM_OracleClassify);

void BM_EnumerateModels(benchmark::State& state) {
  auto index = build_index(parse_kif(tree_kif(5), "tree.kif"));
  std::vector<std::string> terms{"T1", "T2", "T3", "T4", "T5"};
  int domain = static_cast<int>(state.range(0));
  long long models = 0;
  for (auto _ : state) {
    models = 0;
    for_each_model(index, terms, domain, std::nullopt, {},
                   [&](const FiniteModel&) {
                     ++models;
                     return true;
                   });
  }
  state.counters["models"] = static_cast<double>(models);
}
BENCHMARK(BM_EnumerateModels)->DenseRange(1, 4);

void BM_EnumerateRoleModels(benchmark::State& state) {
  auto index = build_index(parse_kif("(subclass Cooking Process)\n"
                                     "(subclass Cook Human)\n",
                                     "roles.kif"));
  std::vector<BridgeAxiom> bridges{{"Cooking", SemanticRole::kAgent, "Cook"}};
  std::vector<std::string> terms{"Cooking", "Cook"};
  int domain = static_cast<int>(state.range(0));
  long long models = 0;
  for (auto _ : state) {
    models = 0;
    for_each_model(index, terms, domain, SemanticRole::kAgent, bridges,
                   [&](const FiniteModel&) {
                     ++models;
                     return true;
                   });
  }
  state.counters["models"] = static_cast<double>(models);
}
BENCHMARK(BM_EnumerateRoleModels)->DenseRange(1, 3);

}  // namespace
}  // namespace cqbench::bench

BENCHMARK_MAIN();
