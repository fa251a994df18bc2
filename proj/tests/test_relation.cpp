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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "tolkit/relation.hpp"

using namespace tolkit;

namespace {

BinaryRelation rel(int n, std::initializer_list<std::pair<int, int>> pairs) {
  BinaryRelation r(n);
  for (const auto& [a, b] : pairs) r.add(a, b);
  return r;
}

// Δ ∪ {(0,1),(1,0)} and Δ ∪ {(1,2),(2,1)} on the 3-element universe.
BinaryRelation theta01() { return rel(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}}); }
BinaryRelation theta12() { return rel(3, {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {2, 1}}); }
// The 3-chain tolerance Δ ∪ {(0,1),(1,0),(1,2),(2,1)}.
BinaryRelation chi3() {
  return rel(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}, {1, 2}, {2, 1}});
}

}  // namespace

TEST_CASE("compose: diagonal is neutral, empty absorbs") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 5; ++n) {
    const BinaryRelation r = oracle::random_relation(rng, n, 0.4);
    CHECK(compose(BinaryRelation::diagonal(n), r) == r);
    CHECK(compose(r, BinaryRelation::diagonal(n)) == r);
    CHECK(compose(BinaryRelation(n), r) == BinaryRelation(n));
    CHECK(compose(r, BinaryRelation(n)) == BinaryRelation(n));
  }
}

TEST_CASE("compose: frozen value on the 3-set") {
  // Brute-force over all (a,b,c) triples gives every pair except (2,0).
  const BinaryRelation expected = rel(
      3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}});
  CHECK(compose(theta01(), theta12()) == expected);
  CHECK(oracle::compose_by_triples(theta01(), theta12()) == expected);
}

TEST_CASE("compose: size mismatch is diagnosed") {
  CHECK_THROWS_AS(compose(BinaryRelation(2), BinaryRelation(3)), Error);
  try {
    compose(BinaryRelation(2), BinaryRelation(3));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SizeMismatch);
  }
}

TEST_CASE("converse: involution and frozen examples") {
  CHECK(converse(BinaryRelation::diagonal(4)) == BinaryRelation::diagonal(4));
  CHECK(converse(rel(2, {{0, 0}, {1, 1}, {0, 1}})) ==
        rel(2, {{0, 0}, {1, 1}, {1, 0}}));
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const BinaryRelation r = oracle::random_relation(rng, 4, 0.3);
    CHECK(converse(converse(r)) == r);
  }
}

TEST_CASE("meet and join basics") {
  const BinaryRelation a = theta01();
  const BinaryRelation b = theta12();
  CHECK(meet(a, a) == a);
  CHECK(meet(a, b) == BinaryRelation::diagonal(3));
  CHECK(join(BinaryRelation::diagonal(3), BinaryRelation(3)) ==
        BinaryRelation::diagonal(3));
}

TEST_CASE("alt_power conventions") {
  const BinaryRelation a = theta01();
  const BinaryRelation b = theta12();
  CHECK(alt_power(a, b, 0) == BinaryRelation::diagonal(3));
  CHECK(alt_power(a, b, 1) == a);
  CHECK(alt_power(a, b, 2) == compose(a, b));
  CHECK(alt_power(a, b, 3) == BinaryRelation::full(3));
  CHECK(alt_power(a, b, 3) == oracle::alt_power_naive(a, b, 3));
}

TEST_CASE("plus_join: frozen examples") {
  const BinaryRelation d = BinaryRelation::diagonal(3);
  CHECK(plus_join(d, d) == d);
  CHECK(plus_join(theta01(), theta12()) == BinaryRelation::full(3));
  CHECK(plus_join(chi3(), chi3()) == BinaryRelation::full(3));
}

TEST_CASE("plus_join: matches the naive union on random relations") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(i % 3);
    const BinaryRelation r = oracle::random_relation(rng, n, 0.35);
    const BinaryRelation s = oracle::random_relation(rng, n, 0.35);
    CHECK(plus_join(r, s) == oracle::plus_join_naive(r, s));
  }
}

TEST_CASE("plus_join is exact for non-reflexive arguments") {
  // alt_power(r, s, 2) ⊆ alt_power(r, s, 1) here, yet the third power adds
  // (0,2); a successive-union fixpoint test would stop too early.
  const BinaryRelation r = rel(3, {{0, 1}, {1, 2}});
  const BinaryRelation s = rel(3, {{1, 1}});
  CHECK(alt_power(r, s, 2) == rel(3, {{0, 1}}));
  CHECK(alt_power(r, s, 3) == rel(3, {{0, 2}}));
  CHECK(plus_join(r, s) == rel(3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("shape_of") {
  CHECK(shape_of(BinaryRelation::diagonal(3)) ==
        RelationShape{true, true, true});
  CHECK(shape_of(rel(2, {{0, 0}, {1, 1}, {0, 1}})) ==
        RelationShape{true, false, true});
  CHECK(shape_of(chi3()) == RelationShape{true, true, false});
}

TEST_CASE("compose is associative, converse antidistributes") {
  std::mt19937 rng(31);
  for (int i = 0; i < 150; ++i) {
    const int n = 2 + static_cast<int>(i % 4);
    const BinaryRelation r = oracle::random_relation(rng, n, 0.4);
    const BinaryRelation s = oracle::random_relation(rng, n, 0.4);
    const BinaryRelation t = oracle::random_relation(rng, n, 0.4);
    CHECK(compose(compose(r, s), t) == compose(r, compose(s, t)));
    CHECK(converse(compose(r, s)) == compose(converse(s), converse(r)));
  }
}

TEST_CASE("reflexive r is contained in r ∘ r⌣, which is symmetric") {
  std::mt19937 rng(37);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(i % 4);
    BinaryRelation r = oracle::random_relation(rng, n, 0.4);
    const BinaryRelation product = compose(r, converse(r));
    CHECK(shape_of(product).symmetric);
    for (int a = 0; a < n; ++a) r.add(a, a);
    CHECK(r.subset_of(compose(r, converse(r))));
  }
}

TEST_CASE("alternating powers grow for reflexive arguments") {
  std::mt19937 rng(41);
  for (int i = 0; i < 60; ++i) {
    const int n = 2 + static_cast<int>(i % 3);
    const BinaryRelation r = oracle::random_reflexive_symmetric(rng, n, 0.4);
    const BinaryRelation s = oracle::random_reflexive_symmetric(rng, n, 0.4);
    for (int k = 1; k <= 4; ++k) {
      CHECK(alt_power(r, s, k).subset_of(alt_power(r, s, k + 2)));
      CHECK(alt_power(r, s, k).subset_of(plus_join(r, s)));
    }
    CHECK(r.subset_of(plus_join(r, s)));
    CHECK(s.subset_of(plus_join(r, s)));
  }
}

TEST_CASE("operations are monotone in each argument") {
  std::mt19937 rng(43);
  const auto grow = [&](const BinaryRelation& base) {
    BinaryRelation bigger = base;
    std::uniform_int_distribution<int> pick(0, base.size() - 1);
    bigger.add(pick(rng), pick(rng));
    return bigger;
  };
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(i % 3);
    const BinaryRelation r = oracle::random_relation(rng, n, 0.3);
    const BinaryRelation s = oracle::random_relation(rng, n, 0.3);
    const BinaryRelation r2 = grow(r);
    const BinaryRelation s2 = grow(s);
    CHECK(compose(r, s).subset_of(compose(r2, s2)));
    CHECK(meet(r, s).subset_of(meet(r2, s2)));
    CHECK(join(r, s).subset_of(join(r2, s2)));
    CHECK(alt_power(r, s, 3).subset_of(alt_power(r2, s2, 3)));
    CHECK(plus_join(r, s).subset_of(plus_join(r2, s2)));
  }
}

TEST_CASE("canonical order sorts by the row-major bit sequence") {
  const BinaryRelation d = BinaryRelation::diagonal(3);
  const BinaryRelation full = BinaryRelation::full(3);
  CHECK(BinaryRelation::canonical_less(d, full));
  CHECK_FALSE(BinaryRelation::canonical_less(full, d));
  CHECK_FALSE(BinaryRelation::canonical_less(d, d));
  // Among the three atoms the order is θ12 < θ02 < θ01.
  const BinaryRelation t01 = theta01();
  const BinaryRelation t12 = theta12();
  CHECK(BinaryRelation::canonical_less(t12, t01));
}

TEST_CASE("pairs are reported sorted and round-trip") {
  const BinaryRelation r = chi3();
  const auto pairs = r.pairs();
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));
  CHECK(BinaryRelation::from_pairs(3, pairs) == r);
}
