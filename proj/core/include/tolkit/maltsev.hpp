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

#ifndef TOLKIT_MALTSEV_HPP
#define TOLKIT_MALTSEV_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tolkit/algebra.hpp"
#include "tolkit/caps.hpp"
#include "tolkit/graph.hpp"

namespace tolkit {

/// One identity of an M(G,H) condition. Variables are indexed by the premise
/// graph's vertices (0 .. arity-1).
///
/// Projection: symbol(x_0, ..., x_{m-1}) ≈ x_variable, one per distinguished
/// position. Edge: for a conclusion edge {w, w'} with a label, the identity
/// t_w ≈ t_{w'} with every variable replaced by the least member of its
/// premise label-connectivity class (the collapse map).
struct ConditionIdentity {
  enum class Kind { Projection, Edge };

  Kind kind = Kind::Projection;
  int left_symbol = -1;
  /// Edge identities only.
  int right_symbol = -1;
  std::string label;
  /// Size-arity map, position -> variable index; the identity map for
  /// projections.
  std::vector<int> collapse;
  /// Projection identities only.
  int variable = -1;
};

/// Existential condition generated from a premise/conclusion graph pair: one
/// term symbol per conclusion vertex, projection identities for the
/// distinguished positions and collapsed edge identities.
struct MaltsevCondition {
  int arity = 0;
  std::vector<std::string> symbols;
  std::vector<ConditionIdentity> identities;
};

/// Term over an algebra's operation symbols and the condition's variables.
class WitnessTerm {
 public:
  static WitnessTerm variable(int index);
  static WitnessTerm apply(std::string operation, std::vector<WitnessTerm> args);

  bool is_variable() const;
  int variable_index() const;
  const std::string& operation() const;
  const std::vector<WitnessTerm>& arguments() const;

 private:
  struct Node;
  explicit WitnessTerm(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Builds M(G, H). The premise must be regular and the graphs must share the
/// label set and the distinguished-vertex count.
MaltsevCondition generate_condition(const LabeledGraph& premise,
                                    const LabeledGraph& conclusion);

struct WitnessCounterexample {
  int identity_index = -1;
  std::vector<int> assignment;
  int lhs = -1;
  int rhs = -1;
};

struct WitnessReport {
  bool pass = false;
  std::optional<WitnessCounterexample> counterexample;
  /// Identities valid on the algebra persist to every homomorphic image,
  /// subalgebra and product, hence to the whole variety it generates.
  std::string variety_note;
};

/// Evaluates every identity over all |A|^arity assignments (collapsed
/// variables range jointly).
WitnessReport check_witnesses(const FiniteAlgebra& algebra,
                              const MaltsevCondition& condition,
                              const std::map<std::string, WitnessTerm>& terms);

/// Value table of the induced arity-ary term operation, row-major.
std::vector<int> witness_value_table(const FiniteAlgebra& algebra,
                                     const WitnessTerm& term, int arity);

enum class SearchStatus { Found, NotFoundDefinitive, Inconclusive };

struct SearchOptions {
  enum class Mode { DepthBounded, ExhaustiveClone };
  Mode mode = Mode::DepthBounded;
  /// DepthBounded only: projections have depth 0.
  int depth = 3;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Inconclusive;
  std::map<std::string, WitnessTerm> assignment;  // Found only
  /// Number of distinct term-operation tables generated.
  std::int64_t table_count = 0;
};

/// Searches for witness terms, deduplicating candidates by their induced
/// value tables. ExhaustiveClone closes the projections under all basic
/// operations to a fixpoint (the full arity-ary clone on the algebra), so a
/// failed search there is definitive; the depth-bounded search can only
/// report Found or Inconclusive.
SearchResult bounded_term_search(const FiniteAlgebra& algebra,
                                 const MaltsevCondition& condition,
                                 const SearchOptions& options,
                                 const Caps& caps = Caps{});

}  // namespace tolkit

#endif  // TOLKIT_MALTSEV_HPP
