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

#include "tolkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "tolkit/errors.hpp"

namespace tolkit {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

struct GraphBuilder {
  std::vector<LabeledEdge> edges;  // provisional vertex ids, creation order
  int next_vertex = 0;

  int fresh() { return next_vertex++; }
};

// Returns (source, sink) in provisional ids.
std::pair<int, int> build(const Term& term, GraphBuilder& builder,
                          UnionFind*& uf_out,
                          std::vector<std::pair<int, int>>& merges) {
  (void)uf_out;
  if (term.is_variable()) {
    const int s = builder.fresh();
    const int t = builder.fresh();
    builder.edges.push_back({s, t, term.variable_name()});
    return {s, t};
  }
  if (term.op() == TermOp::Plus) {
    raise(Errc::UnsupportedPlus,
          "term contains '+'; apply plus_substitute first");
  }
  auto [ls, lt] = build(term.left(), builder, uf_out, merges);
  auto [rs, rt] = build(term.right(), builder, uf_out, merges);
  if (term.op() == TermOp::Compose) {
    merges.emplace_back(lt, rs);
    return {ls, rt};
  }
  // Meet: identify the sources and the sinks.
  merges.emplace_back(ls, rs);
  merges.emplace_back(lt, rt);
  return {ls, lt};
}

}  // namespace

LabeledGraph LabeledGraph::make(int vertex_count, std::vector<LabeledEdge> edges,
                                std::vector<int> distinguished,
                                std::vector<std::string> labels) {
  if (vertex_count <= 0) {
    raise(Errc::Range, "a labeled graph needs at least one vertex");
  }
  if (distinguished.empty()) {
    raise(Errc::Shape, "a labeled graph needs at least one distinguished vertex");
  }
  for (int d : distinguished) {
    if (d < 0 || d >= vertex_count) {
      raise(Errc::Range, "distinguished vertex " + std::to_string(d) +
                             " is out of range");
    }
  }
  {
    std::set<std::string> seen;
    for (const auto& label : labels) {
      if (!seen.insert(label).second) {
        raise(Errc::DuplicateName, "label '" + label + "' listed twice");
      }
    }
  }
  std::set<std::tuple<int, int, std::string>> seen_edges;
  for (auto& edge : edges) {
    if (edge.u < 0 || edge.u >= vertex_count || edge.v < 0 ||
        edge.v >= vertex_count) {
      raise(Errc::Range, "edge endpoint out of range");
    }
    if (edge.u == edge.v) {
      raise(Errc::Shape,
            "self-loop on vertex " + std::to_string(edge.u) + " is not allowed");
    }
    if (edge.u > edge.v) std::swap(edge.u, edge.v);
    if (std::find(labels.begin(), labels.end(), edge.label) == labels.end()) {
      raise(Errc::UnknownLabel,
            "edge label '" + edge.label + "' is not in the label list");
    }
    if (!seen_edges.insert({edge.u, edge.v, edge.label}).second) {
      raise(Errc::Shape, "duplicate edge (" + std::to_string(edge.u) + ", " +
                             std::to_string(edge.v) + ", " + edge.label + ")");
    }
  }
  LabeledGraph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  g.distinguished_ = std::move(distinguished);
  g.labels_ = std::move(labels);
  return g;
}

bool LabeledGraph::has_label(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

TupleRelation::TupleRelation(int size, int arity) : size_(size), arity_(arity) {
  if (size <= 0) raise(Errc::Range, "tuple relation needs a positive universe");
  if (arity <= 0) raise(Errc::Range, "tuple relation needs a positive arity");
}

void TupleRelation::insert(std::vector<int> tuple) {
  if (static_cast<int>(tuple.size()) != arity_) {
    raise(Errc::Arity, "tuple length does not match relation arity");
  }
  for (int value : tuple) {
    if (value < 0 || value >= size_) {
      raise(Errc::Range, "tuple entry out of universe range");
    }
  }
  tuples_.insert(std::move(tuple));
}

bool TupleRelation::contains(const std::vector<int>& tuple) const {
  return tuples_.count(tuple) != 0;
}

bool TupleRelation::subset_of(const TupleRelation& other) const {
  if (size_ != other.size_ || arity_ != other.arity_) {
    raise(Errc::SizeMismatch, "tuple relations are not comparable");
  }
  return std::includes(other.tuples_.begin(), other.tuples_.end(),
                       tuples_.begin(), tuples_.end());
}

TupleRelation TupleRelation::from_binary(const BinaryRelation& relation) {
  TupleRelation out(relation.size(), 2);
  for (const auto& [a, b] : relation.pairs()) out.insert({a, b});
  return out;
}

BinaryRelation TupleRelation::to_binary() const {
  if (arity_ != 2) {
    raise(Errc::Arity, "only 2-ary tuple relations convert to binary ones");
  }
  BinaryRelation out(size_);
  for (const auto& tuple : tuples_) out.add(tuple[0], tuple[1]);
  return out;
}

LabeledGraph graph_of_term(const Term& term) {
  GraphBuilder builder;
  UnionFind* dummy = nullptr;
  std::vector<std::pair<int, int>> merges;
  auto [source, sink] = build(term, builder, dummy, merges);

  UnionFind uf(builder.next_vertex);
  for (const auto& [a, b] : merges) uf.unite(a, b);

  // Depth-first renumbering from the source, following edges in creation
  // order.
  std::vector<int> number(builder.next_vertex, -1);
  int next_number = 0;
  std::vector<int> stack{uf.find(source)};
  number[uf.find(source)] = next_number++;
  while (!stack.empty()) {
    const int v = stack.back();
    std::optional<int> unvisited;
    for (const auto& edge : builder.edges) {
      const int a = uf.find(edge.u);
      const int b = uf.find(edge.v);
      int other = -1;
      if (a == v)
        other = b;
      else if (b == v)
        other = a;
      else
        continue;
      if (number[other] == -1) {
        unvisited = other;
        break;
      }
    }
    if (unvisited) {
      number[*unvisited] = next_number++;
      stack.push_back(*unvisited);
    } else {
      stack.pop_back();
    }
  }
  const int vertex_count = next_number;

  std::vector<LabeledEdge> edges;
  std::set<std::tuple<int, int, std::string>> seen;
  std::vector<std::string> labels;
  for (const auto& edge : builder.edges) {
    int u = number[uf.find(edge.u)];
    int v = number[uf.find(edge.v)];
    if (u > v) std::swap(u, v);
    if (u == v) {
      raise(Errc::Internal, "series-parallel construction made a self-loop");
    }
    // Meets of equal variables can duplicate an edge; keep the first copy.
    if (!seen.insert({u, v, edge.label}).second) continue;
    edges.push_back({u, v, edge.label});
    if (std::find(labels.begin(), labels.end(), edge.label) == labels.end())
      labels.push_back(edge.label);
  }

  std::vector<int> distinguished{number[uf.find(source)],
                                 number[uf.find(sink)]};
  return LabeledGraph::make(vertex_count, std::move(edges),
                            std::move(distinguished), std::move(labels));
}

std::vector<std::vector<int>> label_classes(const LabeledGraph& graph,
                                            std::string_view label) {
  if (!graph.has_label(label)) {
    raise(Errc::UnknownLabel,
          "label '" + std::string(label) + "' is not used by the graph");
  }
  UnionFind uf(graph.vertex_count());
  for (const auto& edge : graph.edges())
    if (edge.label == label) uf.unite(edge.u, edge.v);
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < graph.vertex_count(); ++v)
    classes[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(classes.size());
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

bool is_regular(const LabeledGraph& graph) {
  for (const auto& label : graph.labels())
    for (const auto& cls : label_classes(graph, label))
      if (cls.size() > 2) return false;
  return true;
}

bool is_regular_term(const Term& term) {
  return is_regular(graph_of_term(term));
}

TupleRelation eval_graph(const LabeledGraph& graph,
                         const std::map<std::string, BinaryRelation>& bindings) {
  int universe = -1;
  for (const auto& label : graph.labels()) {
    auto it = bindings.find(label);
    if (it == bindings.end()) {
      raise(Errc::UnboundLabel, "label '" + label + "' has no binding");
    }
    const BinaryRelation& r = it->second;
    if (universe == -1) universe = r.size();
    if (r.size() != universe) {
      raise(Errc::SizeMismatch, "bindings live on different universes");
    }
    const RelationShape shape = shape_of(r);
    if (!shape.reflexive || !shape.symmetric) {
      raise(Errc::NotReflexiveSymmetric,
            "binding for label '" + label + "' must be reflexive and symmetric");
    }
  }
  if (universe == -1 && !bindings.empty())
    universe = bindings.begin()->second.size();
  if (universe == -1) {
    raise(Errc::UnboundLabel,
          "cannot infer the universe: the graph has no labels and no bindings "
          "were given");
  }

  const int m = graph.vertex_count();
  std::vector<std::vector<std::pair<int, const BinaryRelation*>>> adjacent(m);
  for (const auto& edge : graph.edges()) {
    const BinaryRelation* r = &bindings.at(edge.label);
    adjacent[edge.u].push_back({edge.v, r});
    adjacent[edge.v].push_back({edge.u, r});
  }

  const auto& distinguished = graph.distinguished();
  const int h = static_cast<int>(distinguished.size());
  TupleRelation result(universe, h);

  std::vector<int> assignment(m, -1);

  // Most-constrained-first backtracking over the unassigned vertices.
  auto satisfiable = [&](auto&& self) -> bool {
    int best = -1;
    int best_constraints = -1;
    for (int v = 0; v < m; ++v) {
      if (assignment[v] != -1) continue;
      int constraints = 0;
      for (const auto& [w, r] : adjacent[v])
        if (assignment[w] != -1) ++constraints;
      if (constraints > best_constraints) {
        best_constraints = constraints;
        best = v;
      }
    }
    if (best == -1) return true;
    for (int value = 0; value < universe; ++value) {
      bool ok = true;
      for (const auto& [w, r] : adjacent[best]) {
        if (assignment[w] != -1 && !r->contains(value, assignment[w])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assignment[best] = value;
      if (self(self)) {
        assignment[best] = -1;
        return true;
      }
      assignment[best] = -1;
    }
    return false;
  };

  std::vector<int> tuple(h, 0);
  while (true) {
    std::fill(assignment.begin(), assignment.end(), -1);
    bool consistent = true;
    for (int i = 0; i < h && consistent; ++i) {
      const int vertex = distinguished[i];
      if (assignment[vertex] != -1 && assignment[vertex] != tuple[i])
        consistent = false;
      else
        assignment[vertex] = tuple[i];
    }
    if (consistent) {
      // The pinned vertices must satisfy their mutual edges before search.
      for (const auto& edge : graph.edges()) {
        if (assignment[edge.u] != -1 && assignment[edge.v] != -1 &&
            !bindings.at(edge.label).contains(assignment[edge.u],
                                              assignment[edge.v])) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent && satisfiable(satisfiable)) result.insert(tuple);

    int i = h - 1;
    for (; i >= 0; --i) {
      if (++tuple[i] < universe) break;
      tuple[i] = 0;
    }
    if (i < 0) break;
  }
  return result;
}

}  // namespace tolkit
