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

#include <benchmark/benchmark.h>

#include <random>

#include "tolkit/checker.hpp"
#include "tolkit/classify.hpp"
#include "tolkit/maltsev.hpp"

using namespace tolkit;

namespace {

BinaryRelation random_relation(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution flip(density);
  BinaryRelation r(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (flip(rng)) r.add(a, b);
  return r;
}

FiniteAlgebra pentagon() {
  return FiniteAlgebra::make(
      5, {{"meet", 2, {0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 2,
                       0, 2, 0, 0, 0, 3, 3, 0, 1, 2, 3, 4}},
          {"join", 2, {0, 1, 2, 3, 4, 1, 1, 2, 4, 4, 2, 2, 2,
                       4, 4, 3, 4, 4, 3, 4, 4, 4, 4, 4, 4}}});
}

FiniteAlgebra z4() {
  return FiniteAlgebra::make(
      4, {{"add", 2, {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2}},
          {"neg", 1, {0, 3, 2, 1}}});
}

void BM_Compose(benchmark::State& state) {
  std::mt19937 rng(1);
  const int n = static_cast<int>(state.range(0));
  const BinaryRelation r = random_relation(rng, n, 0.4);
  const BinaryRelation s = random_relation(rng, n, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(r, s));
  }
}
BENCHMARK(BM_Compose)->Arg(4)->Arg(6)->Arg(8);

void BM_PlusJoin(benchmark::State& state) {
  std::mt19937 rng(2);
  const int n = static_cast<int>(state.range(0));
  const BinaryRelation r = random_relation(rng, n, 0.3);
  const BinaryRelation s = random_relation(rng, n, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(plus_join(r, s));
  }
}
BENCHMARK(BM_PlusJoin)->Arg(4)->Arg(6);

void BM_EnumerateTolerances(benchmark::State& state) {
  const FiniteAlgebra algebra = pentagon();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_closed(algebra, ClosureMode::Tolerance));
  }
}
BENCHMARK(BM_EnumerateTolerances);

void BM_NestCatalog(benchmark::State& state) {
  const FiniteAlgebra algebra = pentagon();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nest_representable_set(algebra));
  }
}
BENCHMARK(BM_NestCatalog);

void BM_GraphEval(benchmark::State& state) {
  const LabeledGraph graph = graph_of_term(parse_term("a;b;a;b"));
  std::mt19937 rng(3);
  const int n = static_cast<int>(state.range(0));
  BinaryRelation binding = BinaryRelation::diagonal(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < n; ++i) {
    const int a = pick(rng), b = pick(rng);
    binding.add(a, b);
    binding.add(b, a);
  }
  const std::map<std::string, BinaryRelation> bindings{{"a", binding},
                                                       {"b", binding}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_graph(graph, bindings));
  }
}
BENCHMARK(BM_GraphEval)->Arg(4)->Arg(6);

void BM_CloneSearch(benchmark::State& state) {
  const FiniteAlgebra algebra = z4();
  const MaltsevCondition condition = generate_condition(
      graph_of_term(parse_term("a;b")), graph_of_term(parse_term("b;a")));
  SearchOptions clone;
  clone.mode = SearchOptions::Mode::ExhaustiveClone;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounded_term_search(algebra, condition, clone));
  }
}
BENCHMARK(BM_CloneSearch);

}  // namespace

BENCHMARK_MAIN();
