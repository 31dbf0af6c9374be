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

#include "support.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <unistd.h>

#include "cqbench/corpus.h"
#include "cqbench/formula.h"
#include "cqbench/tptp.h"

namespace cqbench::testing {

namespace fs = std::filesystem;

fs::path fixture_path(std::string_view name) {
  return fs::path(CQBENCH_FIXTURE_DIR) / name;
}

fs::path golden_path(std::string_view name) {
  return fs::path(CQBENCH_GOLDEN_DIR) / name;
}

fs::path stub_prover_path() { return fs::path(CQBENCH_STUB_PROVER); }

std::string read_file(const fs::path& path) {
  return read_text_file(path).content;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          fmt::format("cqbench-test-{}-{}", ::getpid(), counter++);
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

const CompetencyQuestion* FixtureWorld::find(std::string_view id) const {
  for (const auto& cq : generated.cqs) {
    if (cq.id == id) return &cq;
  }
  return nullptr;
}

FixtureWorld load_fixture_world(const GeneratorOptions& options) {
  FixtureWorld w;
  std::vector<TextSource> data;
  for (auto name : {"data.noun", "data.verb", "data.adj"}) {
    data.push_back(read_text_file(fixture_path(name)));
  }
  w.store = parse_wordnet_data(data);
  std::vector<TextSource> maps;
  for (auto name : {"WordNetMappings30-noun.txt", "WordNetMappings30-verb.txt",
                    "WordNetMappings30-adj.txt"}) {
    maps.push_back(read_text_file(fixture_path(name)));
  }
  w.mapping = parse_mapping(maps);
  TextSource morph = read_text_file(fixture_path("morphosemantic.csv"));
  w.links = parse_morphosemantic_links(morph.content, morph.name, w.store);
  TextSource kif = read_text_file(fixture_path("mini_sumo.kif"));
  w.kif = parse_kif(kif.content, kif.name);
  w.index = build_index(w.kif);
  TextSource bridges = read_text_file(fixture_path("bridges.csv"));
  w.bridges = parse_bridge_axioms(bridges.content, bridges.name);
  w.generated =
      generate_all(w.store, w.links.links, w.mapping.table, w.index, options);
  return w;
}

const FixtureWorld& fixture_world() {
  static const FixtureWorld world = load_fixture_world();
  return world;
}

namespace {

KifExpr fact(std::string_view head, std::vector<std::string> args) {
  std::vector<KifExpr> children{KifExpr::atom(std::string(head))};
  for (auto& a : args) children.push_back(KifExpr::atom(std::move(a)));
  return KifExpr::list(std::move(children));
}

bool chance(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[static_cast<size_t>(uniform(rng, 0, static_cast<int>(items.size()) - 1))];
}

std::string dump(const std::vector<KifExpr>& facts) {
  std::string out;
  for (const auto& f : facts) {
    if (!out.empty()) out += ' ';
    out += to_string(f);
  }
  return out;
}

}  // namespace

RandomTaxonomy random_taxonomy(std::mt19937_64& rng,
                               const RandomTaxonomyOptions& options) {
  RandomTaxonomy t;
  int budget = options.max_terms;
  int classes = uniform(rng, 1, std::min(options.max_classes, budget));
  budget -= classes;
  int attributes = uniform(rng, 0, std::min(options.max_attributes, budget));
  budget -= attributes;
  int objects = uniform(rng, 0, std::min(options.max_objects, budget));
  for (int i = 0; i < classes; ++i) t.classes.push_back(fmt::format("C{}", i));
  for (int i = 0; i < attributes; ++i) {
    t.attributes.push_back(fmt::format("A{}", i));
  }
  for (int i = 0; i < objects; ++i) t.objects.push_back(fmt::format("O{}", i));

  auto hierarchy = [&](const std::vector<std::string>& names,
                       std::string_view sub, std::string_view disjoint) {
    for (size_t i = 0; i < names.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        if (chance(rng, options.edge_probability)) {
          t.facts.push_back(fact(sub, {names[i], names[j]}));
          t.edges.emplace_back(names[i], names[j]);
        }
      }
    }
    for (size_t i = 0; i < names.size(); ++i) {
      for (size_t j = i; j < names.size(); ++j) {
        if (chance(rng, options.disjoint_probability / (i == j ? 4 : 1))) {
          t.facts.push_back(fact(disjoint, {names[i], names[j]}));
          t.disjoint_pairs.emplace_back(names[i], names[j]);
        }
      }
    }
    // Every name gets at least one fact so that it is indexed with a kind.
    for (const auto& n : names) {
      bool seen = std::any_of(t.edges.begin(), t.edges.end(), [&](auto& e) {
        return e.first == n || e.second == n;
      }) || std::any_of(t.disjoint_pairs.begin(), t.disjoint_pairs.end(),
                        [&](auto& e) { return e.first == n || e.second == n; });
      if (!seen && names.size() > 1) {
        const std::string& other = n == names[0] ? names[1] : names[0];
        bool down = n > other;
        t.facts.push_back(fact(sub, {down ? n : other, down ? other : n}));
        t.edges.emplace_back(down ? n : other, down ? other : n);
      }
    }
  };
  hierarchy(t.classes, "subclass", "disjoint");
  hierarchy(t.attributes, "subAttribute", "contraryAttribute");
  if (t.classes.size() >= 3 && chance(rng, options.partition_probability)) {
    t.facts.push_back(
        fact("partition", {t.classes[0], t.classes[1], t.classes[2]}));
    t.disjoint_pairs.emplace_back(t.classes[1], t.classes[2]);
  }
  for (const auto& o : t.objects) {
    t.facts.push_back(fact("instance", {o, pick(rng, t.classes)}));
    if (t.classes.size() > 1 && chance(rng, 0.3)) {
      t.facts.push_back(fact("instance", {o, pick(rng, t.classes)}));
    }
  }
  return t;
}

std::vector<std::string> check_closure_properties(std::uint64_t seed,
                                                  int cases) {
  std::vector<std::string> failures;
  std::mt19937_64 rng(seed);
  RandomTaxonomyOptions options;
  options.max_classes = 9;
  options.max_attributes = 4;
  options.max_objects = 0;
  options.max_terms = 13;
  options.edge_probability = 0.25;
  options.disjoint_probability = 0.08;
  for (int c = 0; c < cases; ++c) {
    RandomTaxonomy t = random_taxonomy(rng, options);
    OntologyIndex index = build_index(t.facts);
    std::vector<std::string> names = t.classes;
    names.insert(names.end(), t.attributes.begin(), t.attributes.end());
    names.erase(std::remove_if(names.begin(), names.end(),
                               [&](auto& n) { return !index.contains(n); }),
                names.end());
    const size_t n = names.size();
    std::map<std::string, size_t> pos;
    for (size_t i = 0; i < n; ++i) pos[names[i]] = i;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) reach[i][i] = true;
    for (const auto& [a, b] : t.edges) reach[pos.at(a)][pos.at(b)] = true;
    for (size_t k = 0; k < n; ++k) {
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
        }
      }
    }
    auto disjoint_ref = [&](size_t a, size_t b) {
      for (const auto& [x, y] : t.disjoint_pairs) {
        size_t px = pos.at(x), py = pos.at(y);
        if ((reach[a][px] && reach[b][py]) || (reach[a][py] && reach[b][px])) {
          return true;
        }
      }
      return false;
    };
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        bool sub = index.is_subclass_of(names[i], names[j]);
        if (sub != reach[i][j]) {
          failures.push_back(fmt::format(
              "case {}: is_subclass_of({}, {}) = {}, reachability says {} in {}",
              c, names[i], names[j], sub, reach[i][j], dump(t.facts)));
        }
        bool dis = index.are_disjoint(names[i], names[j]);
        if (dis != disjoint_ref(i, j)) {
          failures.push_back(fmt::format(
              "case {}: are_disjoint({}, {}) = {}, reference says {} in {}", c,
              names[i], names[j], dis, !dis, dump(t.facts)));
        }
        if (dis != index.are_disjoint(names[j], names[i])) {
          failures.push_back(fmt::format("case {}: disjointness of {} and {} "
                                         "is not symmetric",
                                         c, names[i], names[j]));
        }
        if (dis) {
          auto w = index.disjointness_witness(names[i], names[j]);
          if (!w || !index.is_subclass_of(names[i], w->first) ||
              !index.is_subclass_of(names[j], w->second)) {
            failures.push_back(fmt::format("case {}: bad witness for {} / {}",
                                           c, names[i], names[j]));
          }
        }
        if (index.is_vacuous(names[i]) != disjoint_ref(i, i)) {
          failures.push_back(
              fmt::format("case {}: vacuity of {} is wrong", c, names[i]));
        }
      }
    }
    // A back edge over an existing path closes a cycle.
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (i == j || !reach[i][j]) continue;
        bool same_kind = (names[i][0] == names[j][0]);
        if (!same_kind) continue;
        auto facts = t.facts;
        facts.push_back(fact(names[i][0] == 'C' ? "subclass" : "subAttribute",
                             {names[j], names[i]}));
        bool threw = false;
        try {
          build_index(facts);
        } catch (const ParseError&) {
        } catch (const Error&) {
          threw = true;
        }
        if (!threw) {
          failures.push_back(fmt::format(
              "case {}: cycle through {} and {} was accepted", c, names[i],
              names[j]));
        }
        i = n;  // one cycle probe per case
        break;
      }
    }
  }
  return failures;
}

namespace {

UnaryStatement statement_for(const OntologyIndex& index, const std::string& t) {
  switch (index.term_kind(t)) {
    case TermKind::kAttribute: return {StatementShape::kHasAttribute, t};
    case TermKind::kObjectInstance: return {StatementShape::kEqualTo, t};
    default: return {StatementShape::kInstanceOf, t};
  }
}

constexpr std::array<SemanticRole, 3> kRoles = {
    SemanticRole::kAgent, SemanticRole::kInstrument, SemanticRole::kResult};
constexpr std::array<ConjectureShape, 4> kShapes = {
    ConjectureShape::kInclusion, ConjectureShape::kExclusion,
    ConjectureShape::kParticipation, ConjectureShape::kNonParticipation};

bool has_role(ConjectureShape s) {
  return s == ConjectureShape::kParticipation ||
         s == ConjectureShape::kNonParticipation;
}

constexpr long long kModelBudget = 300000;

long long model_estimate(size_t unary, size_t objects, int d, bool role) {
  long long n = 1;
  for (int i = 0; i < d; ++i) n *= (1LL << unary);
  for (size_t i = 0; i < objects; ++i) n *= d;
  if (role) n *= (1LL << (d * d));
  return n;
}

}  // namespace

std::vector<std::string> check_oracle_soundness(std::uint64_t seed, int cases,
                                                int max_domain,
                                                SoundnessStats* stats) {
  std::vector<std::string> failures;
  SoundnessStats local;
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    RandomTaxonomy t;
    OntologyIndex index;
    std::vector<std::string> terms;
    // A lone class without facts is not indexed; draw again.
    while (terms.empty()) {
      t = random_taxonomy(rng);
      index = build_index(t.facts);
      for (const auto* group : {&t.classes, &t.attributes, &t.objects}) {
        for (const auto& n : *group) {
          TermKind k = index.term_kind(n);
          if (k == TermKind::kClass || k == TermKind::kAttribute ||
              k == TermKind::kObjectInstance) {
            terms.push_back(n);
          }
        }
      }
    }
    std::vector<std::string> classes;
    for (const auto& n : t.classes) {
      if (index.term_kind(n) == TermKind::kClass) classes.push_back(n);
    }

    std::vector<BridgeAxiom> bridges;
    if (!classes.empty()) {
      int count = uniform(rng, 0, 2);
      for (int b = 0; b < count; ++b) {
        bridges.push_back({pick(rng, classes), pick(rng, std::vector<SemanticRole>(
                                                         kRoles.begin(), kRoles.end())),
                           pick(rng, classes)});
      }
    }
    TaxonomyOracle oracle(index, bridges);

    ConjectureView view;
    view.shape = kShapes[static_cast<size_t>(uniform(rng, 0, 3))];
    view.antecedent = statement_for(index, pick(rng, terms));
    view.consequent = statement_for(index, pick(rng, terms));
    if (has_role(view.shape)) {
      // Bridged roles are the interesting ones; favour them.
      view.role = !bridges.empty() && chance(rng, 0.7)
                      ? pick(rng, bridges).role
                      : kRoles[static_cast<size_t>(uniform(rng, 0, 2))];
    }
    Formula truth = build_conjecture(view);
    std::vector<Formula> candidates{truth, complement(truth),
                                    Formula::negation(truth),
                                    Formula::negation(complement(truth))};
    ++local.cases;

    for (const auto& f : candidates) {
      if (!oracle.proves(f)) continue;
      ++local.proofs;
      std::vector<std::string> model_terms;
      auto add = [&](const std::string& n) {
        if (std::find(model_terms.begin(), model_terms.end(), n) ==
            model_terms.end()) {
          model_terms.push_back(n);
        }
      };
      add(view.antecedent.term);
      add(view.consequent.term);
      if (view.role) {
        for (const auto& b : bridges) {
          if (b.role != *view.role) continue;
          add(b.process_class);
          add(b.participant_class);
        }
      }
      if (model_terms.size() > kMaxEnumeratedTerms) continue;
      size_t objects = 0;
      for (const auto& n : model_terms) {
        if (index.term_kind(n) == TermKind::kObjectInstance) ++objects;
      }
      const size_t unary = model_terms.size() - objects;
      for (int d = 1; d <= max_domain; ++d) {
        if (model_estimate(unary, objects, d, view.role.has_value()) >
            kModelBudget) {
          break;
        }
        local.max_domain_checked = std::max(local.max_domain_checked, d);
        bool violated = false;
        for_each_model(index, model_terms, d, view.role, bridges,
                       [&](const FiniteModel& m) {
                         ++local.models;
                         if (!brute_force_check(f, m)) {
                           violated = true;
                           return false;
                         }
                         return true;
                       });
        if (violated) {
          failures.push_back(fmt::format(
              "case {}: oracle proved {} but a {}-element model refutes it; "
              "taxonomy: {}",
              c, to_kif(f), d, dump(t.facts)));
          break;
        }
      }
    }
  }
  if (stats) *stats = local;
  return failures;
}

std::vector<std::string> check_formula_roundtrips(std::uint64_t seed,
                                                  int cases) {
  std::vector<std::string> failures;
  std::mt19937_64 rng(seed);
  const std::vector<std::string> names = {"Smoking", "Breathing", "Machine",
                                          "Hot",     "Waist",     "Z9_x"};
  const std::array<StatementShape, 3> shapes = {StatementShape::kInstanceOf,
                                                StatementShape::kHasAttribute,
                                                StatementShape::kEqualTo};
  for (int c = 0; c < cases; ++c) {
    ConjectureView view;
    view.shape = kShapes[static_cast<size_t>(uniform(rng, 0, 3))];
    view.negated = chance(rng, 0.3);
    view.antecedent = {shapes[static_cast<size_t>(uniform(rng, 0, 2))],
                       pick(rng, names)};
    view.consequent = {shapes[static_cast<size_t>(uniform(rng, 0, 2))],
                       pick(rng, names)};
    if (has_role(view.shape)) {
      view.role = kRoles[static_cast<size_t>(uniform(rng, 0, 2))];
    }
    Formula f = build_conjecture(view);
    ConjectureView back = analyze_conjecture(f);
    if (back.shape != view.shape || back.negated != view.negated ||
        back.antecedent != view.antecedent ||
        back.consequent != view.consequent || back.role != view.role) {
      failures.push_back(fmt::format("case {}: analyze(build) differs for {}",
                                     c, to_kif(f)));
    }
    if (!is_closed(f) || !has_unique_bindings(f)) {
      failures.push_back(fmt::format("case {}: {} is open or rebinds", c,
                                     to_kif(f)));
    }
    if (!view.negated) {
      Formula comp = complement(f);
      if (comp == f || complement(comp) != f) {
        failures.push_back(
            fmt::format("case {}: complement is not an involution on {}", c,
                        to_kif(f)));
      }
    }
    for (const std::string prefix : {"", "s__"}) {
      TptpOptions options{prefix};
      std::string text =
          fmt::format("fof(c, conjecture, {}).\n", to_fof(f, options));
      try {
        tptp::Problem p = tptp::parse_problem(text, "roundtrip");
        Formula g = from_fof(p.formulas.at(0).formula, options);
        if (g != f) {
          failures.push_back(fmt::format("case {}: from_fof(to_fof) changed {}",
                                         c, to_kif(f)));
        }
      } catch (const Error& e) {
        failures.push_back(
            fmt::format("case {}: {} does not parse back: {}", c, text, e.what()));
      }
    }
  }
  return failures;
}

std::vector<std::string> check_generation_determinism() {
  std::vector<std::string> failures;
  FixtureWorld a = load_fixture_world();
  FixtureWorld b = load_fixture_world();
  if (a.generated.cqs.size() != b.generated.cqs.size()) {
    failures.push_back("question counts differ between two runs");
    return failures;
  }
  for (size_t i = 0; i < a.generated.cqs.size(); ++i) {
    const auto& x = a.generated.cqs[i];
    const auto& y = b.generated.cqs[i];
    if (x.id != y.id || x.truth != y.truth || x.falsity != y.falsity) {
      failures.push_back(fmt::format("question {} differs: {} vs {}", i, x.id,
                                     y.id));
    }
  }
  TempDir d1, d2;
  auto rows1 = write_corpus(a.generated.cqs, d1 / "p", d1.path(), "ax.p");
  auto rows2 = write_corpus(b.generated.cqs, d2 / "p", d2.path(), "ax.p");
  write_manifest(d1 / "manifest.csv", rows1);
  write_manifest(d2 / "manifest.csv", rows2);
  std::set<std::string> n1, n2;
  for (const auto& e : fs::directory_iterator(d1 / "p")) {
    n1.insert(e.path().filename().string());
  }
  for (const auto& e : fs::directory_iterator(d2 / "p")) {
    n2.insert(e.path().filename().string());
  }
  if (n1 != n2) failures.push_back("problem file names differ");
  for (const auto& name : n1) {
    if (n2.count(name) &&
        read_file(d1 / "p" / name) != read_file(d2 / "p" / name)) {
      failures.push_back(fmt::format("bytes of {} differ", name));
    }
  }
  if (read_file(d1 / "manifest.csv") != read_file(d2 / "manifest.csv")) {
    failures.push_back("manifest bytes differ");
  }
  return failures;
}

std::vector<EvaluationRecord> published_total_row_records() {
  std::vector<EvaluationRecord> out;
  auto add = [&](Classification c, MappingQuality m, KnowledgeQuality k,
                 int count) {
    for (int i = 0; i < count; ++i) {
      EvaluationRecord r;
      r.cq_id = "q" + std::to_string(out.size());
      r.qp = kAllQpKinds[out.size() % kAllQpKinds.size()];
      r.classification = c;
      AnnotationRecord a;
      a.cq_id = r.cq_id;
      a.mapping = m;
      a.knowledge = k;
      r.annotation = a;
      out.push_back(std::move(r));
    }
  };
  using C = Classification;
  using M = MappingQuality;
  using K = KnowledgeQuality;
  add(C::kEntailed, M::kCorrectPrecise, K::kCorrect, 11);
  add(C::kEntailed, M::kOnlyCorrect, K::kCorrect, 40);
  add(C::kEntailed, M::kIncorrect, K::kCorrect, 14);
  add(C::kIncompatible, M::kCorrectPrecise, K::kCorrect, 2);
  add(C::kIncompatible, M::kOnlyCorrect, K::kCorrect, 7);
  add(C::kIncompatible, M::kIncorrect, K::kCorrect, 8);
  add(C::kUnknown, M::kCorrectPrecise, K::kNotApplicable, 11);
  add(C::kUnknown, M::kOnlyCorrect, K::kNotApplicable, 40);
  add(C::kUnknown, M::kIncorrect, K::kNotApplicable, 36);
  return out;
}

std::vector<EvaluationRecord> random_records(std::mt19937_64& rng, size_t n,
                                             double annotated_fraction) {
  std::vector<EvaluationRecord> out;
  for (size_t i = 0; i < n; ++i) {
    EvaluationRecord r;
    r.cq_id = fmt::format("q{}", i);
    r.qp = kAllQpKinds[static_cast<size_t>(uniform(rng, 0, 9))];
    r.classification = static_cast<Classification>(uniform(rng, 0, 3));
    r.synsets = {"00000001-n", "00000002-n"};
    r.sumo_terms = {"A", "B"};
    if (chance(rng, annotated_fraction)) {
      AnnotationRecord a;
      a.cq_id = r.cq_id;
      a.mapping = static_cast<MappingQuality>(uniform(rng, 0, 2));
      bool correct = a.mapping != MappingQuality::kIncorrect;
      if (is_solved(r.classification) && correct) {
        a.knowledge = chance(rng, 0.5) ? KnowledgeQuality::kCorrect
                                       : KnowledgeQuality::kIncorrect;
      }
      if (!is_solved(r.classification) && correct) {
        a.entailable = static_cast<Entailable>(uniform(rng, 0, 2));
      }
      r.annotation = a;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> check_table_identities(std::uint64_t seed,
                                                int cases) {
  std::vector<std::string> failures;
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    auto records = random_records(
        rng, static_cast<size_t>(uniform(rng, 0, 300)), chance(rng, 0.5) ? 1.0 : 0.6);
    AnalysisTable table;
    try {
      table = build_analysis_table(records);
      for (const auto& row : table.rows) check_identities(row);
      check_identities(table.total);
    } catch (const Error& e) {
      failures.push_back(fmt::format("case {}: {}", c, e.what()));
      continue;
    }
    // Independent tally of the total row.
    size_t e = 0, i = 0, x = 0, u = 0, cm = 0, cp = 0, im = 0, un = 0, ck = 0,
           ik = 0, e_cm = 0, u_cm = 0;
    for (const auto& r : records) {
      switch (r.classification) {
        case Classification::kEntailed: ++e; break;
        case Classification::kIncompatible: ++i; break;
        case Classification::kConflict: ++x; break;
        case Classification::kUnknown: ++u; break;
      }
      if (!r.annotation) {
        ++un;
        continue;
      }
      bool correct = r.annotation->mapping != MappingQuality::kIncorrect;
      cm += correct;
      cp += r.annotation->mapping == MappingQuality::kCorrectPrecise;
      im += !correct;
      ck += r.annotation->knowledge == KnowledgeQuality::kCorrect;
      ik += r.annotation->knowledge == KnowledgeQuality::kIncorrect;
      e_cm += correct && r.classification == Classification::kEntailed;
      u_cm += correct && r.classification == Classification::kUnknown;
    }
    const AnalysisRow& t = table.total;
    std::array<std::pair<size_t, size_t>, 13> checks = {{
        {t.problems, records.size()},
        {t.entailed.solved, e},
        {t.incompatible.solved, i},
        {t.conflict.solved, x},
        {t.unsolved.unsolved, u},
        {t.total_mapping.correct, cm},
        {t.total_mapping.precise, cp},
        {t.total_mapping.incorrect, im},
        {t.total_mapping.unannotated, un},
        {t.total_correct_knowledge, ck},
        {t.total_incorrect_knowledge, ik},
        {t.entailed.mapping.correct, e_cm},
        {t.unsolved.mapping.correct, u_cm},
    }};
    for (size_t k = 0; k < checks.size(); ++k) {
      if (checks[k].first != checks[k].second) {
        failures.push_back(fmt::format("case {}: total cell {} is {}, tally {}",
                                       c, k, checks[k].first,
                                       checks[k].second));
      }
    }
    size_t row_sum = 0;
    for (const auto& row : table.rows) row_sum += row.problems;
    if (row_sum != t.problems) {
      failures.push_back(fmt::format("case {}: rows add to {}, total is {}", c,
                                     row_sum, t.problems));
    }
  }
  return failures;
}

std::vector<std::string> check_misalignment_bounds(std::uint64_t seed,
                                                   int cases) {
  std::vector<std::string> failures;
  std::mt19937_64 rng(seed);
  for (int c = 0; c < cases; ++c) {
    auto records = random_records(rng, static_cast<size_t>(uniform(rng, 0, 100)), 0.7);
    auto findings = detect_misalignments(records);
    std::set<std::string> reported;
    for (const auto& f : findings) reported.insert(f.cq_id);
    for (const auto& r : records) {
      bool incompatible = r.classification == Classification::kIncompatible;
      bool correct = r.annotation &&
                     r.annotation->mapping != MappingQuality::kIncorrect;
      if (incompatible && correct && !reported.count(r.cq_id)) {
        failures.push_back(fmt::format("case {}: {} missing", c, r.cq_id));
      }
      if (!incompatible && reported.count(r.cq_id)) {
        failures.push_back(
            fmt::format("case {}: {} is not Incompatible", c, r.cq_id));
      }
    }
    for (const auto& f : findings) {
      auto it = std::find_if(records.begin(), records.end(),
                             [&](auto& r) { return r.cq_id == f.cq_id; });
      bool correct = it != records.end() && it->annotation &&
                     it->annotation->mapping != MappingQuality::kIncorrect;
      if (f.confirmed != correct) {
        failures.push_back(
            fmt::format("case {}: {} confirmed flag is wrong", c, f.cq_id));
      }
    }
  }
  return failures;
}

std::vector<std::string> check_sampling_uniformity(int seeds) {
  constexpr size_t kN = 20;
  constexpr double kFraction = 0.25;
  std::vector<std::string> failures;
  std::array<int, kN> hits{};
  for (int s = 0; s < seeds; ++s) {
    auto picked = sample_indices(kN, kFraction, static_cast<std::uint64_t>(s));
    if (picked.size() != 5) {
      failures.push_back(fmt::format("seed {}: {} picked", s, picked.size()));
    }
    for (size_t i : picked) ++hits.at(i);
  }
  const double sigma = std::sqrt(kFraction * (1 - kFraction) / seeds);
  for (size_t i = 0; i < kN; ++i) {
    double freq = static_cast<double>(hits[i]) / seeds;
    if (std::abs(freq - kFraction) > 3 * sigma) {
      failures.push_back(fmt::format(
          "element {} selected with frequency {:.4f}, outside {:.2f} +- {:.4f}",
          i, freq, kFraction, 3 * sigma));
    }
  }
  return failures;
}

}  // namespace cqbench::testing
