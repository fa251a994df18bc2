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

#ifndef TOLKIT_ALGEBRA_HPP
#define TOLKIT_ALGEBRA_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tolkit/caps.hpp"
#include "tolkit/relation.hpp"

namespace tolkit {

/// One finitary operation given by its value table. The table is row-major
/// flattened: for arity k on universe size n it has n^k entries and the tuple
/// (a_1, ..., a_k) lives at index ((a_1 * n + a_2) * n + ...) + a_k. Nullary
/// operations have a single entry.
struct Operation {
  std::string name;
  int arity = 0;
  std::vector<int> table;
};

/// Finite universe {0, ..., n-1} plus operation tables.
class FiniteAlgebra {
 public:
  /// Validates and builds an algebra. Diagnoses Errc::Shape for a wrong table
  /// length, Errc::Range for an out-of-universe entry and Errc::DuplicateName
  /// for repeated operation names.
  static FiniteAlgebra make(int size, std::vector<Operation> operations);

  int size() const { return size_; }
  const std::vector<Operation>& operations() const { return operations_; }
  const Operation* find_operation(std::string_view name) const;

  int apply(const Operation& op, std::span<const int> args) const;

  /// Row-major index of an argument tuple.
  static std::size_t table_index(int size, std::span<const int> args);

 private:
  FiniteAlgebra(int size, std::vector<Operation> operations)
      : size_(size), operations_(std::move(operations)) {}

  int size_ = 0;
  std::vector<Operation> operations_;
};

/// The three relation classes quantified over by the classifier: compatible
/// reflexive relations, tolerances (reflexive symmetric) and congruences
/// (reflexive symmetric transitive).
enum class ClosureMode { CompatibleReflexive, Tolerance, Congruence };

std::string_view closure_mode_name(ClosureMode mode);

/// True iff every operation of the algebra preserves the relation
/// componentwise.
bool is_compatible(const FiniteAlgebra& algebra, const BinaryRelation& relation);

/// Least relation of the given mode containing the seed pairs: the diagonal,
/// the mode's closure rules (symmetry, transitivity) and images under all
/// operations are added until a fixpoint is reached.
BinaryRelation generate_closed(const FiniteAlgebra& algebra,
                               std::span<const std::pair<int, int>> seed,
                               ClosureMode mode);

/// Complete duplicate-free list of the relations of the given mode, in
/// canonical order. When `within` is given, only relations contained in it
/// are produced (the closure is monotone, so pruning escaped branches keeps
/// the enumeration complete below the bound).
std::vector<BinaryRelation> enumerate_closed(const FiniteAlgebra& algebra,
                                             ClosureMode mode,
                                             const Caps& caps = Caps{},
                                             const BinaryRelation* within = nullptr);

}  // namespace tolkit

#endif  // TOLKIT_ALGEBRA_HPP
