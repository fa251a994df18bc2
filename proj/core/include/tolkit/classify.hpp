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

#ifndef TOLKIT_CLASSIFY_HPP
#define TOLKIT_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "tolkit/algebra.hpp"
#include "tolkit/caps.hpp"
#include "tolkit/relation.hpp"

namespace tolkit {

/// Witness tree for nest-representability. Replaying a node:
///   Rep(R)      -> R ∘ R⌣
///   Meet(cs)    -> intersection of the children's replays
///   Conj(R, c)  -> R ∘ replay(c) ∘ R⌣
/// Every witness relation must be compatible and reflexive for the ambient
/// algebra.
class NestDerivation {
 public:
  enum class Rule { Rep, Meet, Conj };

  static NestDerivation rep(BinaryRelation witness);
  static NestDerivation meet_of(std::vector<NestDerivation> children);
  static NestDerivation conj(BinaryRelation witness, NestDerivation child);

  Rule rule() const { return rule_; }
  const BinaryRelation& witness() const;  // Rep and Conj nodes
  const std::vector<NestDerivation>& children() const { return children_; }
  int depth() const;

 private:
  NestDerivation() = default;

  Rule rule_ = Rule::Rep;
  std::optional<BinaryRelation> witness_;
  std::vector<NestDerivation> children_;
};

/// Replays a derivation bottom-up; the result is checked to be a tolerance.
/// Witnesses that are not compatible-reflexive diagnose Errc::BadWitness.
BinaryRelation replay_derivation(const FiniteAlgebra& algebra,
                                 const NestDerivation& derivation);

struct ToleranceEntry {
  BinaryRelation tolerance;
  bool is_congruence = false;
  std::optional<BinaryRelation> representable_witness;
  bool weakly_representable = false;
  /// The representable tolerances containing this one (the finite witness
  /// family for weak representability).
  std::vector<BinaryRelation> weak_witnesses;
  std::optional<NestDerivation> nest_derivation;
};

/// Per-tolerance classification of one finite algebra. Entries are exactly
/// the tolerances of the algebra in canonical order.
struct ToleranceCatalog {
  std::string algebra_id;
  int algebra_size = 0;
  std::vector<ToleranceEntry> entries;

  /// The nest-representable tolerances, canonical order.
  std::vector<BinaryRelation> nest_set() const;
};

/// Searches for a compatible reflexive R with R ∘ R⌣ equal to the tolerance.
/// Only R contained in the tolerance need to be considered: a reflexive R is
/// contained in R ∘ R⌣. Returns the canonically least witness.
std::optional<BinaryRelation> is_representable(const FiniteAlgebra& algebra,
                                               const BinaryRelation& tolerance,
                                               const Caps& caps = Caps{});

struct WeakRepresentability {
  bool weakly_representable = false;
  std::vector<BinaryRelation> witnesses;
};

/// A tolerance is weakly representable iff it equals the intersection of the
/// representable tolerances containing it; on a finite algebra this matches
/// the arbitrary-family definition.
WeakRepresentability is_weakly_representable(const FiniteAlgebra& algebra,
                                             const BinaryRelation& tolerance,
                                             const Caps& caps = Caps{});

/// Closure of the seed tolerances under binary intersection and conjugation
/// X -> R ∘ X ∘ R⌣ by the given compatible reflexive relations. Exposed so
/// the fixpoint can be exercised with reduced seeds; the catalog builder uses
/// the same rules.
std::vector<BinaryRelation> nest_closure_from(
    const FiniteAlgebra& algebra, std::vector<BinaryRelation> seeds,
    const std::vector<BinaryRelation>& conjugators);

/// Full classification: least fixpoint of the nest formation rules, with a
/// minimal-depth derivation per member, plus the representability and weak
/// representability fields for every tolerance.
ToleranceCatalog nest_representable_set(const FiniteAlgebra& algebra,
                                        const Caps& caps = Caps{},
                                        std::string algebra_id = {});

}  // namespace tolkit

#endif  // TOLKIT_CLASSIFY_HPP
