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

#include "tolkit/relation.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tolkit {

namespace {

void require_same_size(const BinaryRelation& lhs, const BinaryRelation& rhs) {
  if (lhs.size() != rhs.size()) {
    raise(Errc::SizeMismatch,
          "relations live on universes of size " + std::to_string(lhs.size()) +
              " and " + std::to_string(rhs.size()));
  }
}

}  // namespace

BinaryRelation::BinaryRelation(int size) : size_(size) {
  if (size <= 0) {
    raise(Errc::Range, "universe cardinality must be positive, got " +
                           std::to_string(size));
  }
  bits_.assign(static_cast<std::size_t>(size) * size, 0);
}

int BinaryRelation::index(int a, int b) const {
  if (a < 0 || a >= size_ || b < 0 || b >= size_) {
    raise(Errc::Range, "pair (" + std::to_string(a) + ", " + std::to_string(b) +
                           ") is outside a universe of size " +
                           std::to_string(size_));
  }
  return a * size_ + b;
}

BinaryRelation BinaryRelation::diagonal(int size) {
  BinaryRelation r(size);
  for (int a = 0; a < size; ++a) r.add(a, a);
  return r;
}

BinaryRelation BinaryRelation::full(int size) {
  BinaryRelation r(size);
  std::fill(r.bits_.begin(), r.bits_.end(), std::uint8_t{1});
  return r;
}

BinaryRelation BinaryRelation::from_pairs(
    int size, std::span<const std::pair<int, int>> pairs) {
  BinaryRelation r(size);
  for (const auto& [a, b] : pairs) r.add(a, b);
  return r;
}

void BinaryRelation::add(int a, int b) { bits_[index(a, b)] = 1; }

int BinaryRelation::pair_count() const {
  int count = 0;
  for (auto bit : bits_) count += bit;
  return count;
}

std::vector<std::pair<int, int>> BinaryRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(bits_.size());
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

bool BinaryRelation::subset_of(const BinaryRelation& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

bool BinaryRelation::canonical_less(const BinaryRelation& a,
                                    const BinaryRelation& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return a.bits_ < b.bits_;
}

bool BinaryRelation::scan_before(const BinaryRelation& a,
                                 const BinaryRelation& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  const int n = a.size_;
  for (int d = 0; d < n; ++d) {
    for (int i = 0; i + d < n; ++i) {
      const int upper = i * n + (i + d);
      if (a.bits_[upper] != b.bits_[upper]) return a.bits_[upper] > b.bits_[upper];
      if (d > 0) {
        const int lower = (i + d) * n + i;
        if (a.bits_[lower] != b.bits_[lower])
          return a.bits_[lower] > b.bits_[lower];
      }
    }
  }
  return false;
}

BinaryRelation compose(const BinaryRelation& lhs, const BinaryRelation& rhs) {
  require_same_size(lhs, rhs);
  const int n = lhs.size();
  BinaryRelation out(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!lhs.contains(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (rhs.contains(b, c)) out.add(a, c);
    }
  }
  return out;
}

BinaryRelation converse(const BinaryRelation& relation) {
  const int n = relation.size();
  BinaryRelation out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (relation.contains(a, b)) out.add(b, a);
  return out;
}

BinaryRelation meet(const BinaryRelation& lhs, const BinaryRelation& rhs) {
  require_same_size(lhs, rhs);
  const int n = lhs.size();
  BinaryRelation out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (lhs.contains(a, b) && rhs.contains(a, b)) out.add(a, b);
  return out;
}

BinaryRelation join(const BinaryRelation& lhs, const BinaryRelation& rhs) {
  require_same_size(lhs, rhs);
  const int n = lhs.size();
  BinaryRelation out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (lhs.contains(a, b) || rhs.contains(a, b)) out.add(a, b);
  return out;
}

BinaryRelation alt_power(const BinaryRelation& first,
                         const BinaryRelation& second, int factors) {
  require_same_size(first, second);
  if (factors < 0) {
    raise(Errc::Range, "alternating power needs a nonnegative factor count");
  }
  BinaryRelation acc = BinaryRelation::diagonal(first.size());
  for (int i = 0; i < factors; ++i)
    acc = compose(acc, i % 2 == 0 ? first : second);
  return acc;
}

BinaryRelation plus_join(const BinaryRelation& first,
                         const BinaryRelation& second) {
  require_same_size(first, second);
  // alt_power(first, second, n+1) = alt_power(first, second, n) ∘ f where f
  // alternates between the operands, so the walk through (power, parity)
  // states is deterministic and eventually periodic. Union everything seen
  // until a state repeats.
  BinaryRelation current = first;  // n = 1
  BinaryRelation total = first;
  std::set<std::pair<int, std::vector<std::pair<int, int>>>> seen;
  int parity = 1;  // next factor index n+1; even n+1 composes with `second`
  seen.insert({parity % 2, current.pairs()});
  while (true) {
    current = compose(current, parity % 2 == 1 ? second : first);
    ++parity;
    auto state = std::make_pair(parity % 2, current.pairs());
    if (!seen.insert(std::move(state)).second) break;
    total = join(total, current);
  }
  return total;
}

RelationShape shape_of(const BinaryRelation& relation) {
  const int n = relation.size();
  RelationShape shape{true, true, true};
  for (int a = 0; a < n; ++a)
    if (!relation.contains(a, a)) shape.reflexive = false;
  for (int a = 0; a < n && shape.symmetric; ++a)
    for (int b = 0; b < n; ++b)
      if (relation.contains(a, b) != relation.contains(b, a)) {
        shape.symmetric = false;
        break;
      }
  for (int a = 0; a < n && shape.transitive; ++a)
    for (int b = 0; b < n && shape.transitive; ++b) {
      if (!relation.contains(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (relation.contains(b, c) && !relation.contains(a, c)) {
          shape.transitive = false;
          break;
        }
    }
  return shape;
}

}  // namespace tolkit
