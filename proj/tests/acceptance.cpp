/*
 * Copyright 2026 the tolkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance suite. Each criterion prints exactly one [PASS]/[FAIL] line;
// the binary exits nonzero if any criterion fails or overruns its time
// budget.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "tolkit/checker.hpp"
#include "tolkit/json_io.hpp"

using namespace tolkit;

namespace {

struct Failure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

const char* kCorpus[] = {"set2.json", "set3.json",   "z2.json",  "z4.json",
                         "chain2.json", "chain3.json", "n5.json"};

// ---------------------------------------------------------------------------
// 1. Term/graph oracle agreement on random PLUS-free terms.
void criterion_term_graph_oracle() {
  std::mt19937 rng(20260808);
  const std::vector<std::string> vars{"a", "b", "g"};
  int cases = 0;
  while (cases < 200) {
    const int n = 2 + cases % 3;  // universes 2..4
    const Term term = oracle::random_plus_free_term(rng, vars, 7);
    std::map<std::string, BinaryRelation> bindings;
    for (const auto& v : vars)
      bindings.emplace(v, oracle::random_reflexive_symmetric(rng, n, 0.45));
    const TupleRelation via_graph = eval_graph(graph_of_term(term), bindings);
    const TupleRelation via_term =
        TupleRelation::from_binary(eval_term(term, bindings));
    require(via_graph == via_term,
            "graph/term evaluations differ on '" + render_term(term) + "'");
    ++cases;
  }
}

// ---------------------------------------------------------------------------
// 2. Classification chain and brute-force flag agreement on the corpus.
void criterion_classification_chain() {
  for (const auto* name : kCorpus) {
    const FiniteAlgebra algebra = load_algebra_file(oracle::corpus_path(name));
    const ToleranceCatalog catalog = nest_representable_set(algebra, Caps{}, name);

    const auto tolerances_brute =
        oracle::enumerate_brute(algebra, ClosureMode::Tolerance);
    require(catalog.entries.size() == tolerances_brute.size(),
            std::string(name) + ": tolerance count mismatch");
    const auto representable_values = oracle::representable_values_brute(algebra);
    const auto nest_brute = oracle::nest_set_brute(algebra);

    for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
      const ToleranceEntry& entry = catalog.entries[i];
      require(entry.tolerance == tolerances_brute[i],
              std::string(name) + ": tolerance list diverges from brute force");

      const bool representable_oracle =
          std::count(representable_values.begin(), representable_values.end(),
                     entry.tolerance) > 0;
      require(entry.representable_witness.has_value() == representable_oracle,
              std::string(name) + ": representable flag mismatch");
      if (entry.representable_witness) {
        require(compose(*entry.representable_witness,
                        converse(*entry.representable_witness)) ==
                    entry.tolerance,
                std::string(name) + ": witness does not reproduce tolerance");
      }

      require(entry.weakly_representable ==
                  oracle::weakly_representable_brute(algebra, entry.tolerance),
              std::string(name) + ": weak representability flag mismatch");

      const bool nest_oracle =
          std::count(nest_brute.begin(), nest_brute.end(), entry.tolerance) > 0;
      require(entry.nest_derivation.has_value() == nest_oracle,
              std::string(name) + ": nest flag mismatch");

      require(shape_of(entry.tolerance).transitive == entry.is_congruence,
              std::string(name) + ": congruence flag mismatch");

      // Inclusion chain.
      if (entry.is_congruence)
        require(entry.representable_witness.has_value(),
                std::string(name) + ": a congruence is not representable");
      if (entry.representable_witness)
        require(entry.weakly_representable,
                std::string(name) + ": representable but not weakly");
      if (entry.weakly_representable)
        require(entry.nest_derivation.has_value(),
                std::string(name) + ": weakly representable but not nest");
    }
  }
}

// ---------------------------------------------------------------------------
// 3. The generated Maltsev condition matches Maltsev-term existence.
void criterion_maltsev_reconstruction() {
  // Generate through the CLI surface and read the file back.
  const std::string condition_file = "/tmp/tolkit_acceptance_condition.json";
  const std::string command = std::string(TOLKIT_CLI) +
                              " maltsev gen -p \"a;b\" -q \"b;a\" --out " +
                              condition_file + " > /dev/null 2>&1";
  require(WEXITSTATUS(std::system(command.c_str())) == 0,
          "maltsev gen did not exit 0");
  const MaltsevCondition condition = load_condition_file(condition_file);
  require(condition.arity == 3 && condition.symbols.size() == 3 &&
              condition.identities.size() == 4,
          "unexpected condition shape for a;b vs b;a");

  const std::map<std::string, bool> has_maltsev_term{
      {"set2.json", false}, {"set3.json", false}, {"z2.json", true},
      {"z4.json", true},    {"chain2.json", false}, {"chain3.json", false},
      {"n5.json", false}};

  SearchOptions clone;
  clone.mode = SearchOptions::Mode::ExhaustiveClone;
  for (const auto* name : kCorpus) {
    const FiniteAlgebra algebra = load_algebra_file(oracle::corpus_path(name));
    const SearchResult result = bounded_term_search(algebra, condition, clone);
    const bool expected = has_maltsev_term.at(name);
    if (expected) {
      require(result.status == SearchStatus::Found,
              std::string(name) + ": expected a Maltsev term");
      require(check_witnesses(algebra, condition, result.assignment).pass,
              std::string(name) + ": found witnesses do not check");
    } else {
      require(result.status == SearchStatus::NotFoundDefinitive,
              std::string(name) + ": expected definitive absence");
    }
  }

  // x - y + z passes on Z4, evaluated over all 64 triples per identity.
  const FiniteAlgebra z4 = load_algebra_file(oracle::corpus_path("z4.json"));
  const std::map<std::string, WitnessTerm> witness{
      {"t0", WitnessTerm::variable(0)},
      {"t1", WitnessTerm::apply(
                 "add",
                 {WitnessTerm::apply(
                      "add", {WitnessTerm::variable(0),
                              WitnessTerm::apply("neg",
                                                 {WitnessTerm::variable(1)})}),
                  WitnessTerm::variable(2)})},
      {"t2", WitnessTerm::variable(2)}};
  require(check_witnesses(z4, condition, witness).pass,
          "x - y + z fails the permutability condition on Z4");
  require(64 == z4.size() * z4.size() * z4.size(),
          "the Z4 sweep is not 64 triples");
}

// ---------------------------------------------------------------------------
// 4. Theorem consistency: certified => nest-true => congruence-true.
void criterion_theorem_consistency() {
  const std::pair<const char*, const char*> suite[] = {
      {"a;b", "b;a"},
      {"a&b", "a;b"},
      {"a&(b;g)", "(a&b);(a&g)"},
      {"a;b;a", "b+a"}};
  TheoremOptions options;
  SearchOptions depth2;
  depth2.mode = SearchOptions::Mode::DepthBounded;
  depth2.depth = 2;
  options.search = depth2;
  for (const auto* name : kCorpus) {
    const FiniteAlgebra algebra = load_algebra_file(oracle::corpus_path(name));
    for (const auto& [p, q] : suite) {
      const Term premise = parse_term(p);
      require(is_regular_term(contains_plus(premise)
                                  ? plus_substitute(premise, 3)
                                  : premise),
              std::string(p) + " is not a regular premise");
      // theorem_report raises Errc::Internal if the chain breaks.
      const TheoremReport report =
          theorem_report(algebra, name, premise, parse_term(q), options);
      require(report.consistent, "report not marked consistent");
      if (report.maltsev == MaltsevStatus::Certified)
        require(report.nest.holds, "certified but nest verdict false");
      if (report.nest.holds)
        require(report.congruence.holds, "nest true but congruence false");
    }
  }
}

// ---------------------------------------------------------------------------
// 5. Nest fixpoint soundness.
void criterion_nest_fixpoint() {
  for (const auto* name : kCorpus) {
    const FiniteAlgebra algebra = load_algebra_file(oracle::corpus_path(name));
    const ToleranceCatalog catalog = nest_representable_set(algebra, Caps{}, name);
    for (const auto& entry : catalog.entries) {
      if (!entry.nest_derivation) continue;
      require(replay_derivation(algebra, *entry.nest_derivation) ==
                  entry.tolerance,
              std::string(name) + ": derivation does not replay");
    }
    const auto nest = catalog.nest_set();
    const auto reflexives =
        enumerate_closed(algebra, ClosureMode::CompatibleReflexive);
    require(nest_closure_from(algebra, nest, reflexives) == nest,
            std::string(name) + ": fixpoint not stable under an extra round");
  }

  const FiniteAlgebra set2 = load_algebra_file(oracle::corpus_path("set2.json"));
  const auto nest2 = nest_representable_set(set2).nest_set();
  require(nest2 == std::vector<BinaryRelation>{BinaryRelation::diagonal(2),
                                               BinaryRelation::full(2)},
          "bare 2-set nest set is not {diagonal, full}");
}

// ---------------------------------------------------------------------------
// 6. Regularity unit truths.
void criterion_regularity_units() {
  require(is_regular_term(parse_term("a;b")), "a;b should be regular");
  require(is_regular_term(parse_term("a&b")), "a&b should be regular");
  require(is_regular_term(parse_term("a;b;a")), "a;b;a should be regular");
  require(!is_regular_term(parse_term("a;a")), "a;a should not be regular");
  const Term p3 = plus_substitute(parse_term("a+b"), 3);
  require(p3 == parse_term("a;b;a"), "(a+b) at three factors is not a;b;a");
  require(is_regular_term(p3), "a;b;a graph should be regular");
}

// ---------------------------------------------------------------------------
// 7. The known counterexample through the CLI.
void criterion_known_counterexample() {
  const std::string out_file = "/tmp/tolkit_acceptance_check.json";
  const std::string command =
      std::string(TOLKIT_CLI) + " check " + oracle::corpus_path("set3.json") +
      " -p \"a;b\" -q \"b;a\" --mode congruences --out " + out_file +
      " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  require(WEXITSTATUS(status) == 1, "expected exit code 1");

  std::ifstream in(out_file);
  require(static_cast<bool>(in), "no output file written");
  const nlohmann::json doc = nlohmann::json::parse(in);
  const nlohmann::json& cx = doc.at("modes").at("congruences").at("counterexample");
  require(cx.at("tuple") == nlohmann::json::array({0, 2}),
          "counterexample pair is not (0, 2)");
  // θ01 = Δ ∪ {(0,1),(1,0)} bound to a, θ12 = Δ ∪ {(1,2),(2,1)} bound to b.
  require(cx.at("bindings").at("a") ==
              nlohmann::json::parse("[[0,0],[0,1],[1,0],[1,1],[2,2]]"),
          "binding for a is not the 01-atom");
  require(cx.at("bindings").at("b") ==
              nlohmann::json::parse("[[0,0],[1,1],[1,2],[2,1],[2,2]]"),
          "binding for b is not the 12-atom");
}

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "term/graph oracle agreement (200 random cases)", 60.0,
       criterion_term_graph_oracle},
      {2, "classification chain matches brute-force flags on the corpus",
       180.0, criterion_classification_chain},
      {3, "Maltsev condition matches Maltsev-term existence", 60.0,
       criterion_maltsev_reconstruction},
      {4, "theorem consistency chain never breaks", 300.0,
       criterion_theorem_consistency},
      {5, "nest fixpoint soundness", 30.0, criterion_nest_fixpoint},
      {6, "regularity unit truths", 1.0, criterion_regularity_units},
      {7, "known counterexample on the bare 3-set", 1.0,
       criterion_known_counterexample},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      criterion.body();
    } catch (const Failure& f) {
      failure = f.message;
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (failure.empty() && elapsed > criterion.budget_seconds) {
      failure = "exceeded the " + std::to_string(criterion.budget_seconds) +
                " s budget";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (failure.empty()) {
      line << "[PASS] " << criterion.number << " " << criterion.title << " ("
           << elapsed << " s)";
    } else {
      line << "[FAIL] " << criterion.number << " " << criterion.title << ": "
           << failure << " (" << elapsed << " s)";
      ++failures;
    }
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
