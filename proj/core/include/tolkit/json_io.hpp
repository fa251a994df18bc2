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

#ifndef TOLKIT_JSON_IO_HPP
#define TOLKIT_JSON_IO_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "tolkit/algebra.hpp"
#include "tolkit/checker.hpp"
#include "tolkit/classify.hpp"
#include "tolkit/graph.hpp"
#include "tolkit/maltsev.hpp"
#include "tolkit/relation.hpp"

/// File formats (all JSON, keys emitted in sorted order so identical values
/// serialize to identical bytes):
///
///   relation   {"size": n, "pairs": [[a, b], ...]}        pairs sorted
///   algebra    {"size": n, "operations": [{"name", "arity", "table"}]}
///   graph      {"vertices": m, "edges": [[u, v, "label"], ...],
///               "distinguished": [d, ...], "labels": ["a", ...]}
///   condition  {"arity": m, "symbols": [...], "identities": [...]}
///   witnesses  {"t0": {"var": 0}, "t1": {"op": name, "args": [...]}, ...}
///   catalog    {"algebra", "size", "entries": [...]} with derivation trees
///              {"rule": "REP" | "MEET" | "CONJ", ...}
namespace tolkit {

BinaryRelation load_relation(std::istream& in);
void save_relation(std::ostream& out, const BinaryRelation& relation);

FiniteAlgebra load_algebra(std::istream& in);
void save_algebra(std::ostream& out, const FiniteAlgebra& algebra);

LabeledGraph load_graph(std::istream& in);
void save_graph(std::ostream& out, const LabeledGraph& graph);

MaltsevCondition load_condition(std::istream& in);
void save_condition(std::ostream& out, const MaltsevCondition& condition);

std::map<std::string, WitnessTerm> load_witnesses(std::istream& in);
void save_witnesses(std::ostream& out,
                    const std::map<std::string, WitnessTerm>& witnesses);

ToleranceCatalog load_catalog(std::istream& in);
void save_catalog(std::ostream& out, const ToleranceCatalog& catalog);

void save_theorem_report(std::ostream& out, const TheoremReport& report);
void save_inclusion_verdict(std::ostream& out, const InclusionVerdict& verdict);
void save_witness_report(std::ostream& out, const WitnessReport& report);
void save_search_result(std::ostream& out, const SearchResult& result);

/// Path convenience wrappers; Errc::Io on a missing or unreadable file.
BinaryRelation load_relation_file(const std::string& path);
FiniteAlgebra load_algebra_file(const std::string& path);
LabeledGraph load_graph_file(const std::string& path);
MaltsevCondition load_condition_file(const std::string& path);
std::map<std::string, WitnessTerm> load_witnesses_file(const std::string& path);

}  // namespace tolkit

#endif  // TOLKIT_JSON_IO_HPP
