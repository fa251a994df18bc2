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

#ifndef TOLKIT_GRAPH_HPP
#define TOLKIT_GRAPH_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tolkit/relation.hpp"
#include "tolkit/term.hpp"

namespace tolkit {

/// Undirected labeled edge, stored with u <= v. Self-loops are rejected and
/// parallel edges must carry distinct labels.
struct LabeledEdge {
  int u = 0;
  int v = 0;
  std::string label;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Edge-labeled graph with an ordered list of distinguished vertices
/// (repetition allowed).
class LabeledGraph {
 public:
  static LabeledGraph make(int vertex_count, std::vector<LabeledEdge> edges,
                           std::vector<int> distinguished,
                           std::vector<std::string> labels);

  int vertex_count() const { return vertex_count_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  const std::vector<int>& distinguished() const { return distinguished_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_label(std::string_view label) const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  LabeledGraph() = default;

  int vertex_count_ = 0;
  std::vector<LabeledEdge> edges_;
  std::vector<int> distinguished_;
  std::vector<std::string> labels_;
};

/// Set of h-tuples over a finite universe.
class TupleRelation {
 public:
  TupleRelation(int size, int arity);

  int size() const { return size_; }
  int arity() const { return arity_; }
  const std::set<std::vector<int>>& tuples() const { return tuples_; }

  void insert(std::vector<int> tuple);
  bool contains(const std::vector<int>& tuple) const;
  bool subset_of(const TupleRelation& other) const;

  static TupleRelation from_binary(const BinaryRelation& relation);
  BinaryRelation to_binary() const;  // arity 2 only

  friend bool operator==(const TupleRelation&, const TupleRelation&) = default;

 private:
  int size_ = 0;
  int arity_ = 0;
  std::set<std::vector<int>> tuples_;
};

/// Series-parallel graph of a PLUS-free term, two distinguished vertices
/// (source, sink): a variable is a single labeled edge, composition glues the
/// left sink to the right source, meet identifies sources and sinks. Vertices
/// are renumbered in depth-first discovery order from the source.
LabeledGraph graph_of_term(const Term& term);

/// Partition of all vertices into connected components of the subgraph that
/// uses only edges with the given label; untouched vertices are singletons.
/// Classes are sorted by least member, members ascending.
std::vector<std::vector<int>> label_classes(const LabeledGraph& graph,
                                            std::string_view label);

/// True iff, for every label, every label-connectivity class has at most two
/// vertices.
bool is_regular(const LabeledGraph& graph);
bool is_regular_term(const Term& term);

/// The h-ary relation of distinguished-vertex tuples realizable by mapping
/// the graph into the universe so that every edge lands on a pair of the
/// binding of its label. Bindings must be reflexive and symmetric and share
/// one universe. Backtracking assigns the most constrained vertex first.
TupleRelation eval_graph(const LabeledGraph& graph,
                         const std::map<std::string, BinaryRelation>& bindings);

}  // namespace tolkit

#endif  // TOLKIT_GRAPH_HPP
