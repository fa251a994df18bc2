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

// Brute-force reference implementations used as test oracles. These stay
// independent of the enumeration / fixpoint machinery they check: relations
// are enumerated as raw bitmasks and filtered by definition.

#ifndef TOLKIT_TESTS_ORACLES_HPP
#define TOLKIT_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tolkit/algebra.hpp"
#include "tolkit/graph.hpp"
#include "tolkit/relation.hpp"
#include "tolkit/term.hpp"

namespace tolkit::oracle {

/// Composition by definition: scan all (a, b, c) triples.
BinaryRelation compose_by_triples(const BinaryRelation& lhs,
                                  const BinaryRelation& rhs);

/// Alternating power by repeated oracle composition.
BinaryRelation alt_power_naive(const BinaryRelation& first,
                               const BinaryRelation& second, int factors);

/// Union of alternating powers up to an explicit bound that is provably past
/// stabilization for the finite universe.
BinaryRelation plus_join_naive(const BinaryRelation& first,
                               const BinaryRelation& second);

/// Every relation on {0..n-1} with the requested properties, enumerated from
/// raw bitmasks (n*n <= 25 bits required unless reflexive and symmetric are
/// both set). Canonical order.
std::vector<BinaryRelation> all_relations(int n, bool reflexive, bool symmetric,
                                          bool transitive);

/// All compatible reflexive relations by brute bitmask filtering.
std::vector<BinaryRelation> compatible_reflexive_brute(
    const FiniteAlgebra& algebra);

/// All relations of the closure mode, by filtering all_relations through
/// is_compatible.
std::vector<BinaryRelation> enumerate_brute(const FiniteAlgebra& algebra,
                                            ClosureMode mode);

/// {R ∘ R⌣ : R compatible reflexive}, deduplicated, canonical order.
std::vector<BinaryRelation> representable_values_brute(
    const FiniteAlgebra& algebra);

/// Direct definition of weak representability: some subset of the
/// representable tolerances that contain the relation meets to it exactly.
/// Falls back from subset enumeration to the full meet when the candidate
/// family is large (the full meet is the finest intersection achievable).
bool weakly_representable_brute(const FiniteAlgebra& algebra,
                                const BinaryRelation& tolerance);

/// Nest set by naive iteration: seed with the representable values, close
/// under binary meets and conjugation by every brute-force compatible
/// reflexive relation.
std::vector<BinaryRelation> nest_set_brute(const FiniteAlgebra& algebra);

/// Graph evaluation by filtering every vertex assignment.
TupleRelation eval_graph_naive(const LabeledGraph& graph,
                               const std::map<std::string, BinaryRelation>& bindings);

/// Deterministic random generators for property tests.
BinaryRelation random_relation(std::mt19937& rng, int n, double density);
BinaryRelation random_reflexive_symmetric(std::mt19937& rng, int n,
                                          double density);

/// Random PLUS-free term over the given variable names with at most
/// `max_nodes` AST nodes.
Term random_plus_free_term(std::mt19937& rng,
                           const std::vector<std::string>& variables,
                           int max_nodes);

/// Random term that may contain '+'.
Term random_term(std::mt19937& rng, const std::vector<std::string>& variables,
                 int max_nodes);

std::string corpus_path(const std::string& name);

}  // namespace tolkit::oracle

#endif  // TOLKIT_TESTS_ORACLES_HPP
