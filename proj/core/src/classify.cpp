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

#include "tolkit/classify.hpp"

#include <map>
#include <set>
#include <utility>

#include "tolkit/errors.hpp"

namespace tolkit {

namespace {

void require_tolerance(const FiniteAlgebra& algebra,
                       const BinaryRelation& relation) {
  const RelationShape shape = shape_of(relation);
  if (!shape.reflexive || !shape.symmetric ||
      !is_compatible(algebra, relation)) {
    raise(Errc::NotATolerance,
          "the relation is not a tolerance of the algebra");
  }
}

void require_compatible_reflexive(const FiniteAlgebra& algebra,
                                  const BinaryRelation& relation) {
  if (!shape_of(relation).reflexive || !is_compatible(algebra, relation)) {
    raise(Errc::BadWitness,
          "witness relation is not compatible and reflexive for the algebra");
  }
}

BinaryRelation conjugate(const BinaryRelation& conjugator,
                         const BinaryRelation& core) {
  return compose(conjugator, compose(core, converse(conjugator)));
}

using DerivationMap =
    std::map<BinaryRelation, NestDerivation,
             decltype(&BinaryRelation::canonical_less)>;

/// One breadth-first fixpoint round over rules (2) and (3); candidates are
/// derived from the previous round's set only, so first discovery happens at
/// minimal rule depth.
DerivationMap nest_fixpoint(const FiniteAlgebra& algebra,
                            const std::vector<BinaryRelation>& conjugators,
                            DerivationMap seeds) {
  DerivationMap known = std::move(seeds);
  bool grew = true;
  while (grew) {
    grew = false;
    DerivationMap added(&BinaryRelation::canonical_less);
    for (const auto& [x, dx] : known) {
      for (const auto& [y, dy] : known) {
        BinaryRelation m = meet(x, y);
        if (!known.count(m) && !added.count(m)) {
          added.emplace(std::move(m), NestDerivation::meet_of({dx, dy}));
        }
      }
      for (const auto& r : conjugators) {
        BinaryRelation c = conjugate(r, x);
        if (!known.count(c) && !added.count(c)) {
          added.emplace(std::move(c), NestDerivation::conj(r, dx));
        }
      }
    }
    for (auto& [rel, derivation] : added) {
      known.emplace(rel, std::move(derivation));
      grew = true;
    }
  }
  return known;
}

}  // namespace

NestDerivation NestDerivation::rep(BinaryRelation witness) {
  NestDerivation d;
  d.rule_ = Rule::Rep;
  d.witness_ = std::move(witness);
  return d;
}

NestDerivation NestDerivation::meet_of(std::vector<NestDerivation> children) {
  if (children.empty()) {
    raise(Errc::Shape, "a Meet derivation needs at least one child");
  }
  NestDerivation d;
  d.rule_ = Rule::Meet;
  d.children_ = std::move(children);
  return d;
}

NestDerivation NestDerivation::conj(BinaryRelation witness,
                                    NestDerivation child) {
  NestDerivation d;
  d.rule_ = Rule::Conj;
  d.witness_ = std::move(witness);
  d.children_.push_back(std::move(child));
  return d;
}

const BinaryRelation& NestDerivation::witness() const {
  if (!witness_) raise(Errc::Internal, "derivation node carries no witness");
  return *witness_;
}

int NestDerivation::depth() const {
  int deepest = 0;
  for (const auto& child : children_)
    deepest = std::max(deepest, child.depth());
  return deepest + 1;
}

BinaryRelation replay_derivation(const FiniteAlgebra& algebra,
                                 const NestDerivation& derivation) {
  BinaryRelation result(algebra.size());
  switch (derivation.rule()) {
    case NestDerivation::Rule::Rep: {
      const BinaryRelation& r = derivation.witness();
      require_compatible_reflexive(algebra, r);
      result = compose(r, converse(r));
      break;
    }
    case NestDerivation::Rule::Meet: {
      bool first = true;
      for (const auto& child : derivation.children()) {
        BinaryRelation part = replay_derivation(algebra, child);
        result = first ? part : meet(result, part);
        first = false;
      }
      break;
    }
    case NestDerivation::Rule::Conj: {
      const BinaryRelation& r = derivation.witness();
      require_compatible_reflexive(algebra, r);
      result =
          conjugate(r, replay_derivation(algebra, derivation.children()[0]));
      break;
    }
  }
  const RelationShape shape = shape_of(result);
  if (!shape.reflexive || !shape.symmetric ||
      !is_compatible(algebra, result)) {
    raise(Errc::Internal, "derivation replayed to a non-tolerance");
  }
  return result;
}

std::optional<BinaryRelation> is_representable(const FiniteAlgebra& algebra,
                                               const BinaryRelation& tolerance,
                                               const Caps& caps) {
  require_tolerance(algebra, tolerance);
  const auto candidates = enumerate_closed(
      algebra, ClosureMode::CompatibleReflexive, caps, &tolerance);
  for (const auto& r : candidates) {
    if (compose(r, converse(r)) == tolerance) return r;
  }
  return std::nullopt;
}

WeakRepresentability is_weakly_representable(const FiniteAlgebra& algebra,
                                             const BinaryRelation& tolerance,
                                             const Caps& caps) {
  require_tolerance(algebra, tolerance);
  WeakRepresentability out;
  const auto tolerances = enumerate_closed(algebra, ClosureMode::Tolerance, caps);
  BinaryRelation intersection = BinaryRelation::full(algebra.size());
  for (const auto& t : tolerances) {
    if (!tolerance.subset_of(t)) continue;
    if (!is_representable(algebra, t, caps)) continue;
    out.witnesses.push_back(t);
    intersection = meet(intersection, t);
  }
  out.weakly_representable = (intersection == tolerance);
  return out;
}

std::vector<BinaryRelation> nest_closure_from(
    const FiniteAlgebra& algebra, std::vector<BinaryRelation> seeds,
    const std::vector<BinaryRelation>& conjugators) {
  DerivationMap seed_map(&BinaryRelation::canonical_less);
  for (auto& s : seeds) {
    require_tolerance(algebra, s);
    // The seed stands in for a rule-(1) tolerance here; the placeholder
    // derivation is not replayed.
    seed_map.emplace(std::move(s), NestDerivation::rep(
                                       BinaryRelation::diagonal(algebra.size())));
  }
  for (const auto& r : conjugators) require_compatible_reflexive(algebra, r);
  DerivationMap closed = nest_fixpoint(algebra, conjugators, std::move(seed_map));
  std::vector<BinaryRelation> out;
  out.reserve(closed.size());
  for (const auto& [rel, derivation] : closed) out.push_back(rel);
  return out;
}

ToleranceCatalog nest_representable_set(const FiniteAlgebra& algebra,
                                        const Caps& caps,
                                        std::string algebra_id) {
  ToleranceCatalog catalog;
  catalog.algebra_id = std::move(algebra_id);
  catalog.algebra_size = algebra.size();

  const auto tolerances = enumerate_closed(algebra, ClosureMode::Tolerance, caps);
  const auto compatible_reflexive =
      enumerate_closed(algebra, ClosureMode::CompatibleReflexive, caps);

  // Rule (1): all products R ∘ R⌣. The canonically least witness wins.
  DerivationMap seeds(&BinaryRelation::canonical_less);
  std::map<BinaryRelation, BinaryRelation,
           decltype(&BinaryRelation::canonical_less)>
      representable_witness(&BinaryRelation::canonical_less);
  for (const auto& r : compatible_reflexive) {
    BinaryRelation t = compose(r, converse(r));
    if (!seeds.count(t)) {
      seeds.emplace(t, NestDerivation::rep(r));
      representable_witness.emplace(std::move(t), r);
    }
  }

  DerivationMap nest =
      nest_fixpoint(algebra, compatible_reflexive, std::move(seeds));

  for (const auto& tolerance : tolerances) {
    ToleranceEntry entry;
    entry.tolerance = tolerance;
    entry.is_congruence = shape_of(tolerance).transitive;

    auto rep = representable_witness.find(tolerance);
    if (rep != representable_witness.end())
      entry.representable_witness = rep->second;

    BinaryRelation intersection = BinaryRelation::full(algebra.size());
    for (const auto& [t, witness] : representable_witness) {
      if (!tolerance.subset_of(t)) continue;
      entry.weak_witnesses.push_back(t);
      intersection = meet(intersection, t);
    }
    entry.weakly_representable = (intersection == tolerance);

    auto derived = nest.find(tolerance);
    if (derived != nest.end()) entry.nest_derivation = derived->second;

    catalog.entries.push_back(std::move(entry));
  }
  return catalog;
}

std::vector<BinaryRelation> ToleranceCatalog::nest_set() const {
  std::vector<BinaryRelation> out;
  for (const auto& entry : entries)
    if (entry.nest_derivation) out.push_back(entry.tolerance);
  return out;
}

}  // namespace tolkit
