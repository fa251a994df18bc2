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

#ifndef TOLKIT_CHECKER_HPP
#define TOLKIT_CHECKER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tolkit/algebra.hpp"
#include "tolkit/caps.hpp"
#include "tolkit/classify.hpp"
#include "tolkit/graph.hpp"
#include "tolkit/maltsev.hpp"
#include "tolkit/term.hpp"

namespace tolkit {

struct InclusionCounterexample {
  /// Variable (or label) name -> bound relation, sorted by name.
  std::map<std::string, BinaryRelation> bindings;
  /// Offending tuple of the premise evaluation (a pair for term checks).
  std::vector<int> tuple;
};

struct InclusionVerdict {
  bool holds = false;
  std::optional<InclusionCounterexample> counterexample;
  std::int64_t tuples_checked = 0;
  /// False when the verdict comes from random sampling instead of the full
  /// quantifier sweep.
  bool exhaustive = true;
};

/// Core quantifier sweep: binds the sorted variables of p and q to tuples
/// from `relations` (odometer order, first variable outermost) and checks
/// eval(p) ⊆ eval(q) for each. The relation list is scanned in the order
/// given; counterexample selection is the first failure.
InclusionVerdict check_term_inclusion(const FiniteAlgebra& algebra,
                                      const Term& premise,
                                      const Term& conclusion,
                                      const std::vector<BinaryRelation>& relations,
                                      const Caps& caps = Caps{});

/// `relations` ordered for the deterministic scan (BinaryRelation::scan_before).
std::vector<BinaryRelation> binding_scan_order(std::vector<BinaryRelation> relations);

/// Quantifies the variables over all congruences of the algebra.
InclusionVerdict check_congruence_inclusion(const FiniteAlgebra& algebra,
                                            const Term& premise,
                                            const Term& conclusion,
                                            const Caps& caps = Caps{});

/// Quantifies the variables over the nest-representable tolerances.
InclusionVerdict check_nest_inclusion(const FiniteAlgebra& algebra,
                                      const Term& premise,
                                      const Term& conclusion,
                                      const std::vector<BinaryRelation>& nest_set,
                                      const Caps& caps = Caps{});
InclusionVerdict check_nest_inclusion(const FiniteAlgebra& algebra,
                                      const Term& premise,
                                      const Term& conclusion,
                                      const Caps& caps = Caps{});

enum class GraphCheckMode { Congruences, Nest };

/// G(...) ⊆ H(...) over the mode's relation set; the graphs must share the
/// label set and the distinguished-vertex count.
InclusionVerdict check_graph_inclusion(const FiniteAlgebra& algebra,
                                       const LabeledGraph& premise,
                                       const LabeledGraph& conclusion,
                                       GraphCheckMode mode,
                                       const Caps& caps = Caps{});

/// Randomized spot-check used above the evaluation cap; never claims an
/// exhaustive verdict.
InclusionVerdict sample_term_inclusion(const FiniteAlgebra& algebra,
                                       const Term& premise,
                                       const Term& conclusion,
                                       const std::vector<BinaryRelation>& relations,
                                       int samples, std::uint64_t seed);

enum class MaltsevStatus { Certified, DefinitivelyAbsent, Inconclusive, NotRun };

std::string_view maltsev_status_name(MaltsevStatus status);

struct TheoremOptions {
  /// Optional witness assignment to verify.
  std::optional<std::map<std::string, WitnessTerm>> witness;
  /// Optional term search.
  std::optional<SearchOptions> search;
  /// Factor count used to expand a conclusion containing '+' for condition
  /// generation; defaults to the premise's regular n (or 3 when the premise
  /// is PLUS-free).
  std::optional<int> conclusion_factors;
};

struct TheoremReport {
  std::string algebra_id;
  std::string premise;
  std::string conclusion;
  /// The PLUS-free forms actually used: the premise everywhere, the
  /// conclusion for condition generation only (verdict evaluation keeps the
  /// exact '+').
  std::string premise_used;
  std::string conclusion_for_condition;
  bool premise_has_plus = false;
  bool conclusion_has_plus = false;
  /// 0 when the premise is PLUS-free, else the regular n in {3, 4}.
  int premise_factors = 0;
  int conclusion_factors = 0;
  /// "p", "p3" or "p4": which form passed the regularity gate.
  std::string regularity_checked;

  InclusionVerdict congruence;
  InclusionVerdict nest;

  MaltsevStatus maltsev = MaltsevStatus::NotRun;
  std::string maltsev_source;  // "witness-file", "search-depth", "search-clone", "none"
  std::optional<std::map<std::string, WitnessTerm>> maltsev_witness;
  std::optional<WitnessCounterexample> maltsev_counterexample;
  std::int64_t clone_tables = 0;

  /// The algebra-local implication chain certified => nest => congruence was
  /// verified; a violation raises Errc::Internal instead of producing a
  /// report.
  bool consistent = false;
  std::string scope_note;
};

/// Runs the regularity gate, both inclusion checks, condition generation and
/// (optionally) witness checking or search, then asserts the implication
/// chain.
TheoremReport theorem_report(const FiniteAlgebra& algebra,
                             std::string algebra_id, const Term& premise,
                             const Term& conclusion,
                             const TheoremOptions& options = {},
                             const Caps& caps = Caps{});

}  // namespace tolkit

#endif  // TOLKIT_CHECKER_HPP
