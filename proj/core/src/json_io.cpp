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

#include "tolkit/json_io.hpp"

#include <fstream>
#include <ostream>

#include "json.hpp"
#include "tolkit/errors.hpp"

namespace tolkit {

namespace {

using nlohmann::json;

json parse_stream(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    raise(Errc::Io, std::string("invalid JSON: ") + e.what());
  }
}

void write(std::ostream& out, const json& value) { out << value.dump(2) << '\n'; }

int require_int(const json& value, const char* what) {
  if (!value.is_number_integer()) {
    raise(Errc::Io, std::string(what) + " must be an integer");
  }
  return value.get<int>();
}

const json& require_field(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    raise(Errc::Io, std::string("missing field '") + key + "'");
  }
  return object.at(key);
}

json relation_pairs_json(const BinaryRelation& relation) {
  json pairs = json::array();
  for (const auto& [a, b] : relation.pairs()) pairs.push_back({a, b});
  return pairs;
}

BinaryRelation relation_from_json(const json& value, int size) {
  BinaryRelation relation(size);
  if (!value.is_array()) raise(Errc::Io, "'pairs' must be an array");
  for (const auto& pair : value) {
    if (!pair.is_array() || pair.size() != 2) {
      raise(Errc::Io, "each pair must be a two-element array");
    }
    relation.add(require_int(pair[0], "pair entry"),
                 require_int(pair[1], "pair entry"));
  }
  return relation;
}

json witness_term_json(const WitnessTerm& term) {
  if (term.is_variable()) return json{{"var", term.variable_index()}};
  json args = json::array();
  for (const auto& arg : term.arguments()) args.push_back(witness_term_json(arg));
  return json{{"op", term.operation()}, {"args", std::move(args)}};
}

WitnessTerm witness_term_from_json(const json& value) {
  if (!value.is_object()) raise(Errc::Io, "witness term must be an object");
  if (value.contains("var")) {
    return WitnessTerm::variable(require_int(value.at("var"), "'var'"));
  }
  const auto& name = require_field(value, "op");
  if (!name.is_string()) raise(Errc::Io, "'op' must be a string");
  std::vector<WitnessTerm> args;
  if (value.contains("args")) {
    if (!value.at("args").is_array()) raise(Errc::Io, "'args' must be an array");
    for (const auto& arg : value.at("args"))
      args.push_back(witness_term_from_json(arg));
  }
  return WitnessTerm::apply(name.get<std::string>(), std::move(args));
}

json derivation_json(const NestDerivation& derivation) {
  switch (derivation.rule()) {
    case NestDerivation::Rule::Rep:
      return json{{"rule", "REP"},
                  {"witness", relation_pairs_json(derivation.witness())}};
    case NestDerivation::Rule::Meet: {
      json children = json::array();
      for (const auto& child : derivation.children())
        children.push_back(derivation_json(child));
      return json{{"rule", "MEET"}, {"children", std::move(children)}};
    }
    case NestDerivation::Rule::Conj:
      return json{{"rule", "CONJ"},
                  {"witness", relation_pairs_json(derivation.witness())},
                  {"child", derivation_json(derivation.children()[0])}};
  }
  raise(Errc::Internal, "unreachable derivation rule");
}

NestDerivation derivation_from_json(const json& value, int size) {
  const auto& rule = require_field(value, "rule");
  if (rule == "REP") {
    return NestDerivation::rep(
        relation_from_json(require_field(value, "witness"), size));
  }
  if (rule == "MEET") {
    std::vector<NestDerivation> children;
    for (const auto& child : require_field(value, "children"))
      children.push_back(derivation_from_json(child, size));
    return NestDerivation::meet_of(std::move(children));
  }
  if (rule == "CONJ") {
    return NestDerivation::conj(
        relation_from_json(require_field(value, "witness"), size),
        derivation_from_json(require_field(value, "child"), size));
  }
  raise(Errc::Io, "derivation rule must be REP, MEET or CONJ");
}

json counterexample_json(const InclusionCounterexample& counterexample) {
  json bindings = json::object();
  for (const auto& [name, relation] : counterexample.bindings)
    bindings[name] = relation_pairs_json(relation);
  return json{{"bindings", std::move(bindings)},
              {"tuple", counterexample.tuple}};
}

json verdict_json(const InclusionVerdict& verdict) {
  json out{{"holds", verdict.holds},
           {"tuples_checked", verdict.tuples_checked},
           {"exhaustive", verdict.exhaustive}};
  if (verdict.counterexample)
    out["counterexample"] = counterexample_json(*verdict.counterexample);
  return out;
}

json witness_counterexample_json(const WitnessCounterexample& counterexample) {
  return json{{"identity", counterexample.identity_index},
              {"assignment", counterexample.assignment},
              {"lhs", counterexample.lhs},
              {"rhs", counterexample.rhs}};
}

json witness_map_json(const std::map<std::string, WitnessTerm>& witnesses) {
  json out = json::object();
  for (const auto& [symbol, term] : witnesses)
    out[symbol] = witness_term_json(term);
  return out;
}

}  // namespace

BinaryRelation load_relation(std::istream& in) {
  const json doc = parse_stream(in);
  const int size = require_int(require_field(doc, "size"), "'size'");
  return relation_from_json(require_field(doc, "pairs"), size);
}

void save_relation(std::ostream& out, const BinaryRelation& relation) {
  write(out,
        json{{"size", relation.size()}, {"pairs", relation_pairs_json(relation)}});
}

FiniteAlgebra load_algebra(std::istream& in) {
  const json doc = parse_stream(in);
  const int size = require_int(require_field(doc, "size"), "'size'");
  const auto& ops = require_field(doc, "operations");
  if (!ops.is_array()) raise(Errc::Io, "'operations' must be an array");
  std::vector<Operation> operations;
  for (const auto& op : ops) {
    Operation operation;
    const auto& name = require_field(op, "name");
    if (!name.is_string()) raise(Errc::Io, "operation 'name' must be a string");
    operation.name = name.get<std::string>();
    operation.arity = require_int(require_field(op, "arity"), "'arity'");
    const auto& table = require_field(op, "table");
    if (!table.is_array()) raise(Errc::Io, "operation 'table' must be an array");
    for (const auto& entry : table)
      operation.table.push_back(require_int(entry, "table entry"));
    operations.push_back(std::move(operation));
  }
  return FiniteAlgebra::make(size, std::move(operations));
}

void save_algebra(std::ostream& out, const FiniteAlgebra& algebra) {
  json ops = json::array();
  for (const auto& op : algebra.operations()) {
    ops.push_back(
        json{{"name", op.name}, {"arity", op.arity}, {"table", op.table}});
  }
  write(out, json{{"size", algebra.size()}, {"operations", std::move(ops)}});
}

LabeledGraph load_graph(std::istream& in) {
  const json doc = parse_stream(in);
  const int vertices = require_int(require_field(doc, "vertices"), "'vertices'");
  const auto& edges_json = require_field(doc, "edges");
  if (!edges_json.is_array()) raise(Errc::Io, "'edges' must be an array");
  std::vector<LabeledEdge> edges;
  for (const auto& edge : edges_json) {
    if (!edge.is_array() || edge.size() != 3 || !edge[2].is_string()) {
      raise(Errc::Io, "each edge must be [u, v, \"label\"]");
    }
    edges.push_back({require_int(edge[0], "edge endpoint"),
                     require_int(edge[1], "edge endpoint"),
                     edge[2].get<std::string>()});
  }
  std::vector<int> distinguished;
  for (const auto& d : require_field(doc, "distinguished"))
    distinguished.push_back(require_int(d, "distinguished vertex"));
  std::vector<std::string> labels;
  for (const auto& label : require_field(doc, "labels")) {
    if (!label.is_string()) raise(Errc::Io, "labels must be strings");
    labels.push_back(label.get<std::string>());
  }
  return LabeledGraph::make(vertices, std::move(edges), std::move(distinguished),
                            std::move(labels));
}

void save_graph(std::ostream& out, const LabeledGraph& graph) {
  json edges = json::array();
  for (const auto& edge : graph.edges())
    edges.push_back({edge.u, edge.v, edge.label});
  write(out, json{{"vertices", graph.vertex_count()},
                  {"edges", std::move(edges)},
                  {"distinguished", graph.distinguished()},
                  {"labels", graph.labels()}});
}

MaltsevCondition load_condition(std::istream& in) {
  const json doc = parse_stream(in);
  MaltsevCondition condition;
  condition.arity = require_int(require_field(doc, "arity"), "'arity'");
  for (const auto& symbol : require_field(doc, "symbols")) {
    if (!symbol.is_string()) raise(Errc::Io, "symbols must be strings");
    condition.symbols.push_back(symbol.get<std::string>());
  }
  const auto symbol_index = [&](const json& value) {
    if (!value.is_string()) raise(Errc::Io, "identity symbol must be a string");
    const auto name = value.get<std::string>();
    for (std::size_t i = 0; i < condition.symbols.size(); ++i)
      if (condition.symbols[i] == name) return static_cast<int>(i);
    raise(Errc::Io, "identity references unknown symbol '" + name + "'");
  };
  for (const auto& identity_json : require_field(doc, "identities")) {
    ConditionIdentity identity;
    const auto& kind = require_field(identity_json, "kind");
    if (kind == "projection") {
      identity.kind = ConditionIdentity::Kind::Projection;
      identity.left_symbol = symbol_index(require_field(identity_json, "symbol"));
      identity.variable =
          require_int(require_field(identity_json, "variable"), "'variable'");
      if (identity.variable < 0 || identity.variable >= condition.arity) {
        raise(Errc::Io, "projection variable index out of range");
      }
      identity.collapse.resize(condition.arity);
      for (int i = 0; i < condition.arity; ++i) identity.collapse[i] = i;
    } else if (kind == "edge") {
      identity.kind = ConditionIdentity::Kind::Edge;
      identity.left_symbol = symbol_index(require_field(identity_json, "left"));
      identity.right_symbol =
          symbol_index(require_field(identity_json, "right"));
      const auto& label = require_field(identity_json, "label");
      if (!label.is_string()) raise(Errc::Io, "'label' must be a string");
      identity.label = label.get<std::string>();
      for (const auto& entry : require_field(identity_json, "collapse")) {
        const int target = require_int(entry, "collapse entry");
        if (target < 0 || target >= condition.arity) {
          raise(Errc::Io, "collapse entry out of range");
        }
        identity.collapse.push_back(target);
      }
      if (static_cast<int>(identity.collapse.size()) != condition.arity) {
        raise(Errc::Io, "collapse map length must equal the arity");
      }
    } else {
      raise(Errc::Io, "identity kind must be 'projection' or 'edge'");
    }
    condition.identities.push_back(std::move(identity));
  }
  return condition;
}

void save_condition(std::ostream& out, const MaltsevCondition& condition) {
  json identities = json::array();
  for (const auto& identity : condition.identities) {
    if (identity.kind == ConditionIdentity::Kind::Projection) {
      identities.push_back(
          json{{"kind", "projection"},
               {"symbol", condition.symbols[identity.left_symbol]},
               {"variable", identity.variable}});
    } else {
      identities.push_back(
          json{{"kind", "edge"},
               {"label", identity.label},
               {"left", condition.symbols[identity.left_symbol]},
               {"right", condition.symbols[identity.right_symbol]},
               {"collapse", identity.collapse}});
    }
  }
  write(out, json{{"arity", condition.arity},
                  {"symbols", condition.symbols},
                  {"identities", std::move(identities)}});
}

std::map<std::string, WitnessTerm> load_witnesses(std::istream& in) {
  const json doc = parse_stream(in);
  if (!doc.is_object()) {
    raise(Errc::Io, "witness file must map symbols to term trees");
  }
  std::map<std::string, WitnessTerm> out;
  for (const auto& [symbol, term] : doc.items())
    out.emplace(symbol, witness_term_from_json(term));
  return out;
}

void save_witnesses(std::ostream& out,
                    const std::map<std::string, WitnessTerm>& witnesses) {
  write(out, witness_map_json(witnesses));
}

ToleranceCatalog load_catalog(std::istream& in) {
  const json doc = parse_stream(in);
  ToleranceCatalog catalog;
  catalog.algebra_id = require_field(doc, "algebra").get<std::string>();
  catalog.algebra_size = require_int(require_field(doc, "size"), "'size'");
  for (const auto& entry_json : require_field(doc, "entries")) {
    ToleranceEntry entry;
    entry.tolerance = relation_from_json(require_field(entry_json, "tolerance"),
                                         catalog.algebra_size);
    entry.is_congruence = require_field(entry_json, "is_congruence").get<bool>();
    if (entry_json.contains("representable_witness")) {
      entry.representable_witness = relation_from_json(
          entry_json.at("representable_witness"), catalog.algebra_size);
    }
    entry.weakly_representable =
        require_field(entry_json, "weakly_representable").get<bool>();
    for (const auto& witness : require_field(entry_json, "weak_witnesses"))
      entry.weak_witnesses.push_back(
          relation_from_json(witness, catalog.algebra_size));
    if (entry_json.contains("nest_derivation")) {
      entry.nest_derivation = derivation_from_json(
          entry_json.at("nest_derivation"), catalog.algebra_size);
    }
    catalog.entries.push_back(std::move(entry));
  }
  return catalog;
}

void save_catalog(std::ostream& out, const ToleranceCatalog& catalog) {
  json entries = json::array();
  for (const auto& entry : catalog.entries) {
    json entry_json{{"tolerance", relation_pairs_json(entry.tolerance)},
                    {"is_congruence", entry.is_congruence},
                    {"representable", entry.representable_witness.has_value()},
                    {"weakly_representable", entry.weakly_representable},
                    {"nest_representable", entry.nest_derivation.has_value()}};
    if (entry.representable_witness) {
      entry_json["representable_witness"] =
          relation_pairs_json(*entry.representable_witness);
    }
    json weak = json::array();
    for (const auto& witness : entry.weak_witnesses)
      weak.push_back(relation_pairs_json(witness));
    entry_json["weak_witnesses"] = std::move(weak);
    if (entry.nest_derivation)
      entry_json["nest_derivation"] = derivation_json(*entry.nest_derivation);
    entries.push_back(std::move(entry_json));
  }
  write(out, json{{"algebra", catalog.algebra_id},
                  {"size", catalog.algebra_size},
                  {"entries", std::move(entries)}});
}

void save_inclusion_verdict(std::ostream& out, const InclusionVerdict& verdict) {
  write(out, verdict_json(verdict));
}

void save_witness_report(std::ostream& out, const WitnessReport& report) {
  json doc{{"pass", report.pass}, {"variety_note", report.variety_note}};
  if (report.counterexample)
    doc["counterexample"] = witness_counterexample_json(*report.counterexample);
  write(out, doc);
}

void save_search_result(std::ostream& out, const SearchResult& result) {
  json doc{{"table_count", result.table_count}};
  switch (result.status) {
    case SearchStatus::Found:
      doc["status"] = "found";
      doc["assignment"] = witness_map_json(result.assignment);
      break;
    case SearchStatus::NotFoundDefinitive:
      doc["status"] = "not-found-definitive";
      break;
    case SearchStatus::Inconclusive:
      doc["status"] = "inconclusive";
      break;
  }
  write(out, doc);
}

void save_theorem_report(std::ostream& out, const TheoremReport& report) {
  json doc{{"algebra", report.algebra_id},
           {"premise", report.premise},
           {"conclusion", report.conclusion},
           {"premise_used", report.premise_used},
           {"conclusion_for_condition", report.conclusion_for_condition},
           {"premise_has_plus", report.premise_has_plus},
           {"conclusion_has_plus", report.conclusion_has_plus},
           {"premise_factors", report.premise_factors},
           {"conclusion_factors", report.conclusion_factors},
           {"regularity_checked", report.regularity_checked},
           {"congruence", verdict_json(report.congruence)},
           {"nest", verdict_json(report.nest)},
           {"maltsev", std::string(maltsev_status_name(report.maltsev))},
           {"maltsev_source", report.maltsev_source},
           {"clone_tables", report.clone_tables},
           {"consistent", report.consistent},
           {"scope_note", report.scope_note}};
  if (report.maltsev_witness)
    doc["maltsev_witness"] = witness_map_json(*report.maltsev_witness);
  if (report.maltsev_counterexample) {
    doc["maltsev_counterexample"] =
        witness_counterexample_json(*report.maltsev_counterexample);
  }
  write(out, doc);
}

namespace {

template <typename Loader>
auto load_file(const std::string& path, Loader&& loader) {
  std::ifstream in(path);
  if (!in) raise(Errc::Io, "cannot open '" + path + "'");
  return loader(in);
}

}  // namespace

BinaryRelation load_relation_file(const std::string& path) {
  return load_file(path, [](std::istream& in) { return load_relation(in); });
}

FiniteAlgebra load_algebra_file(const std::string& path) {
  return load_file(path, [](std::istream& in) { return load_algebra(in); });
}

LabeledGraph load_graph_file(const std::string& path) {
  return load_file(path, [](std::istream& in) { return load_graph(in); });
}

MaltsevCondition load_condition_file(const std::string& path) {
  return load_file(path, [](std::istream& in) { return load_condition(in); });
}

std::map<std::string, WitnessTerm> load_witnesses_file(const std::string& path) {
  return load_file(path, [](std::istream& in) { return load_witnesses(in); });
}

}  // namespace tolkit
