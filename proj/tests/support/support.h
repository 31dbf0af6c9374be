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

#ifndef CQBENCH_TESTS_SUPPORT_H_
#define CQBENCH_TESTS_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cqbench/analytics.h"
#include "cqbench/generator.h"
#include "cqbench/kif.h"
#include "cqbench/mapping.h"
#include "cqbench/oracle.h"
#include "cqbench/ontology.h"
#include "cqbench/wordnet.h"

namespace cqbench::testing {

std::filesystem::path fixture_path(std::string_view name);
std::filesystem::path golden_path(std::string_view name);
std::filesystem::path stub_prover_path();
std::string read_file(const std::filesystem::path& path);

// Removed with its contents on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(std::string_view name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

// The bundled mini resources, loaded and generated.
struct FixtureWorld {
  SynsetStore store;
  MappingParseResult mapping;
  MorphLinkSet links;
  std::vector<KifExpr> kif;
  OntologyIndex index;
  std::vector<BridgeAxiom> bridges;
  GenerationResult generated;

  const CompetencyQuestion* find(std::string_view id) const;
};

FixtureWorld load_fixture_world(const GeneratorOptions& options = {});
// Loaded once per process with default options.
const FixtureWorld& fixture_world();

// Random taxonomy over classes C<i>, attributes A<i> and objects O<i>.
// Specialisation edges always point to a smaller index, so the result is
// acyclic.
struct RandomTaxonomyOptions {
  int max_classes = 4;
  int max_attributes = 2;
  int max_objects = 1;
  int max_terms = 5;
  double edge_probability = 0.4;
  double disjoint_probability = 0.2;
  double partition_probability = 0.1;
};

struct RandomTaxonomy {
  std::vector<KifExpr> facts;
  std::vector<std::string> classes;
  std::vector<std::string> attributes;
  std::vector<std::string> objects;
  // (narrow, wide) specialisation edges and declared disjoint pairs, kept
  // for reference computations.
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> disjoint_pairs;
};

RandomTaxonomy random_taxonomy(std::mt19937_64& rng,
                               const RandomTaxonomyOptions& options = {});

// Each check returns one message per violation; empty means the property
// holds on every generated case.

// is_subclass_of against Floyd-Warshall reachability, are_disjoint against
// the declared pairs lifted by reachability, and acyclicity rejection.
std::vector<std::string> check_closure_properties(std::uint64_t seed,
                                                  int cases);

struct SoundnessStats {
  int cases = 0;
  int proofs = 0;  // formulas the oracle proved, all checked
  long long models = 0;
  int max_domain_checked = 0;
};

// Oracle proofs of random conjectures over random taxonomies checked in
// every finite model up to `max_domain` elements.
std::vector<std::string> check_oracle_soundness(std::uint64_t seed, int cases,
                                                int max_domain,
                                                SoundnessStats* stats = nullptr);

// complement is an involution, analyze inverts build, and from_fof
// inverts to_fof on random conjectures.
std::vector<std::string> check_formula_roundtrips(std::uint64_t seed,
                                                  int cases);

// Two generation runs over the fixtures produce identical ids and
// identical problem file bytes.
std::vector<std::string> check_generation_determinism();

// Random record sets: table identities, per-cell tallies and row sums.
std::vector<std::string> check_table_identities(std::uint64_t seed, int cases);

// Findings cover every Incompatible record annotated with a correct
// mapping and nothing outside the Incompatible records.
std::vector<std::string> check_misalignment_bounds(std::uint64_t seed,
                                                   int cases);

// Selection frequency of every element of a 20-element set at fraction 0.25
// over `seeds` seeds is within three binomial standard deviations.
std::vector<std::string> check_sampling_uniformity(int seeds);

// 169 annotated records whose total analysis row is the published one:
// 169 / 65 / 51(11) / 14 / 65 / 0 / 17 / 9(2) / 8 / 17 / 0 / 87 / 51(11) /
// 36 / 111(24) / 58 / 82 / 0 / 87.
std::vector<EvaluationRecord> published_total_row_records();

std::vector<EvaluationRecord> random_records(std::mt19937_64& rng, size_t n,
                                             double annotated_fraction);

}  // namespace cqbench::testing

#endif  // CQBENCH_TESTS_SUPPORT_H_
