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

#ifndef TOLKIT_RELATION_HPP
#define TOLKIT_RELATION_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tolkit/errors.hpp"

namespace tolkit {

struct RelationShape {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;

  friend bool operator==(const RelationShape&, const RelationShape&) = default;
};

/// Exact binary relation on the universe {0, ..., n-1}, stored as an n x n
/// boolean membership matrix. Relations are plain values: two relations are
/// equal iff their matrices are equal.
class BinaryRelation {
 public:
  BinaryRelation() = default;

  /// Empty relation on a universe of the given (positive) cardinality.
  explicit BinaryRelation(int size);

  static BinaryRelation diagonal(int size);
  static BinaryRelation full(int size);
  static BinaryRelation from_pairs(int size,
                                   std::span<const std::pair<int, int>> pairs);

  int size() const { return size_; }
  bool contains(int a, int b) const { return bits_[index(a, b)] != 0; }
  void add(int a, int b);
  int pair_count() const;

  /// All member pairs in row-major (lexicographic) order.
  std::vector<std::pair<int, int>> pairs() const;

  bool subset_of(const BinaryRelation& other) const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

  /// Canonical enumeration order: universe size first, then lexicographic on
  /// the row-major bit sequence of the matrix.
  static bool canonical_less(const BinaryRelation& a, const BinaryRelation& b);

  /// Deterministic order used when scanning binding tuples in the checkers:
  /// the matrix bits are read along diagonal bands (main diagonal first, then
  /// the bands at distance 1, 2, ...) and relations sort descending on that
  /// sequence, so denser near-diagonal relations are tried first.
  static bool scan_before(const BinaryRelation& a, const BinaryRelation& b);

 private:
  int index(int a, int b) const;

  int size_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Relational composition: (a,c) iff there is b with (a,b) in lhs and (b,c)
/// in rhs.
BinaryRelation compose(const BinaryRelation& lhs, const BinaryRelation& rhs);

/// Converse: all pairs reversed.
BinaryRelation converse(const BinaryRelation& relation);

/// Pointwise intersection / union.
BinaryRelation meet(const BinaryRelation& lhs, const BinaryRelation& rhs);
BinaryRelation join(const BinaryRelation& lhs, const BinaryRelation& rhs);

/// Alternating composition with `factors` relation factors starting from
/// `first`: 0 gives the diagonal, 1 gives `first`, 2 gives first∘second,
/// 3 gives first∘second∘first, and so on.
BinaryRelation alt_power(const BinaryRelation& first,
                         const BinaryRelation& second, int factors);

/// Union of alt_power(first, second, n) over all n >= 1. Exact on a finite
/// universe: the alternating factor sequence is eventually periodic, so the
/// union is taken until the (matrix, parity) state repeats.
BinaryRelation plus_join(const BinaryRelation& first,
                         const BinaryRelation& second);

RelationShape shape_of(const BinaryRelation& relation);

}  // namespace tolkit

#endif  // TOLKIT_RELATION_HPP
