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

#include "tolkit/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

#include "tolkit/errors.hpp"

namespace tolkit {

namespace {

std::size_t power(int base, int exponent) {
  std::size_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= static_cast<std::size_t>(base);
  return out;
}

void require_relation_size(const FiniteAlgebra& algebra,
                           const BinaryRelation& relation) {
  if (algebra.size() != relation.size()) {
    raise(Errc::SizeMismatch, "relation on a universe of size " +
                                  std::to_string(relation.size()) +
                                  " does not fit an algebra of size " +
                                  std::to_string(algebra.size()));
  }
}

/// Advances a mixed-radix counter; returns false once it wraps around.
bool next_tuple(std::vector<int>& tuple, int radix) {
  for (int i = static_cast<int>(tuple.size()) - 1; i >= 0; --i) {
    if (++tuple[i] < radix) return true;
    tuple[i] = 0;
  }
  return false;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::make(int size, std::vector<Operation> operations) {
  if (size <= 0) {
    raise(Errc::Range,
          "universe cardinality must be positive, got " + std::to_string(size));
  }
  std::unordered_set<std::string> names;
  for (const auto& op : operations) {
    if (op.arity < 0) {
      raise(Errc::Shape, "operation '" + op.name + "' has negative arity");
    }
    if (!names.insert(op.name).second) {
      raise(Errc::DuplicateName, "operation '" + op.name + "' defined twice");
    }
    const std::size_t expected = power(size, op.arity);
    if (op.table.size() != expected) {
      raise(Errc::Shape, "operation '" + op.name + "' of arity " +
                             std::to_string(op.arity) + " needs " +
                             std::to_string(expected) + " table entries, got " +
                             std::to_string(op.table.size()));
    }
    for (int value : op.table) {
      if (value < 0 || value >= size) {
        raise(Errc::Range, "operation '" + op.name + "' table entry " +
                               std::to_string(value) +
                               " is outside a universe of size " +
                               std::to_string(size));
      }
    }
  }
  return FiniteAlgebra(size, std::move(operations));
}

const Operation* FiniteAlgebra::find_operation(std::string_view name) const {
  for (const auto& op : operations_)
    if (op.name == name) return &op;
  return nullptr;
}

std::size_t FiniteAlgebra::table_index(int size, std::span<const int> args) {
  std::size_t index = 0;
  for (int a : args) index = index * static_cast<std::size_t>(size) + a;
  return index;
}

int FiniteAlgebra::apply(const Operation& op, std::span<const int> args) const {
  if (static_cast<int>(args.size()) != op.arity) {
    raise(Errc::Arity, "operation '" + op.name + "' expects " +
                           std::to_string(op.arity) + " arguments, got " +
                           std::to_string(args.size()));
  }
  return op.table[table_index(size_, args)];
}

std::string_view closure_mode_name(ClosureMode mode) {
  switch (mode) {
    case ClosureMode::CompatibleReflexive:
      return "compatible-reflexive";
    case ClosureMode::Tolerance:
      return "tolerance";
    case ClosureMode::Congruence:
      return "congruence";
  }
  return "unknown";
}

bool is_compatible(const FiniteAlgebra& algebra,
                   const BinaryRelation& relation) {
  require_relation_size(algebra, relation);
  const auto pairs = relation.pairs();
  for (const auto& op : algebra.operations()) {
    if (op.arity == 0) {
      const int c = op.table[0];
      if (!relation.contains(c, c)) return false;
      continue;
    }
    std::vector<int> pick(op.arity, 0);
    std::vector<int> left(op.arity), right(op.arity);
    const int count = static_cast<int>(pairs.size());
    if (count == 0) continue;
    do {
      for (int i = 0; i < op.arity; ++i) {
        left[i] = pairs[pick[i]].first;
        right[i] = pairs[pick[i]].second;
      }
      const int a = algebra.apply(op, left);
      const int b = algebra.apply(op, right);
      if (!relation.contains(a, b)) return false;
    } while (next_tuple(pick, count));
  }
  return true;
}

BinaryRelation generate_closed(const FiniteAlgebra& algebra,
                               std::span<const std::pair<int, int>> seed,
                               ClosureMode mode) {
  const int n = algebra.size();
  BinaryRelation rel = BinaryRelation::diagonal(n);
  for (const auto& [a, b] : seed) rel.add(a, b);  // range-checked by add

  bool changed = true;
  while (changed) {
    changed = false;

    if (mode != ClosureMode::CompatibleReflexive) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (rel.contains(a, b) && !rel.contains(b, a)) {
            rel.add(b, a);
            changed = true;
          }
    }
    if (mode == ClosureMode::Congruence) {
      for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
          if (!rel.contains(a, b)) continue;
          for (int c = 0; c < n; ++c)
            if (rel.contains(b, c) && !rel.contains(a, c)) {
              rel.add(a, c);
              changed = true;
            }
        }
    }

    const auto pairs = rel.pairs();
    const int count = static_cast<int>(pairs.size());
    for (const auto& op : algebra.operations()) {
      if (op.arity == 0) continue;  // (c, c) is already on the diagonal
      std::vector<int> pick(op.arity, 0);
      std::vector<int> left(op.arity), right(op.arity);
      do {
        for (int i = 0; i < op.arity; ++i) {
          left[i] = pairs[pick[i]].first;
          right[i] = pairs[pick[i]].second;
        }
        const int a = algebra.apply(op, left);
        const int b = algebra.apply(op, right);
        if (!rel.contains(a, b)) {
          rel.add(a, b);
          changed = true;
        }
      } while (next_tuple(pick, count));
    }
  }
  return rel;
}

std::vector<BinaryRelation> enumerate_closed(const FiniteAlgebra& algebra,
                                             ClosureMode mode, const Caps& caps,
                                             const BinaryRelation* within) {
  const int n = algebra.size();
  if (n > caps.max_universe) {
    raise(Errc::CapExceeded, "universe size " + std::to_string(n) +
                                 " exceeds the configured cap of " +
                                 std::to_string(caps.max_universe));
  }
  if (within != nullptr && within->size() != n) {
    raise(Errc::SizeMismatch, "bounding relation size does not match algebra");
  }

  const auto fits = [&](const BinaryRelation& r) {
    return within == nullptr || r.subset_of(*within);
  };

  std::set<BinaryRelation, decltype(&BinaryRelation::canonical_less)> found(
      &BinaryRelation::canonical_less);
  std::deque<BinaryRelation> frontier;

  BinaryRelation least = generate_closed(algebra, {}, mode);
  if (fits(least)) {
    found.insert(least);
    frontier.push_back(std::move(least));
  }

  while (!frontier.empty()) {
    BinaryRelation current = std::move(frontier.front());
    frontier.pop_front();
    auto seed = current.pairs();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (current.contains(a, b)) continue;
        seed.emplace_back(a, b);
        BinaryRelation next = generate_closed(algebra, seed, mode);
        seed.pop_back();
        if (!fits(next)) continue;
        if (found.insert(next).second) {
          if (static_cast<int>(found.size()) > caps.max_set) {
            raise(Errc::CapExceeded,
                  "enumeration produced more than " +
                      std::to_string(caps.max_set) + " relations");
          }
          frontier.push_back(std::move(next));
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace tolkit
