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

#include "tolkit/maltsev.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "tolkit/errors.hpp"

namespace tolkit {

struct WitnessTerm::Node {
  bool is_variable = false;
  int index = -1;
  std::string operation;
  std::vector<WitnessTerm> arguments;
};

WitnessTerm WitnessTerm::variable(int index) {
  if (index < 0) raise(Errc::Range, "variable index must be nonnegative");
  auto node = std::make_shared<Node>();
  node->is_variable = true;
  node->index = index;
  return WitnessTerm(std::move(node));
}

WitnessTerm WitnessTerm::apply(std::string operation,
                               std::vector<WitnessTerm> args) {
  auto node = std::make_shared<Node>();
  node->operation = std::move(operation);
  node->arguments = std::move(args);
  return WitnessTerm(std::move(node));
}

bool WitnessTerm::is_variable() const { return node_->is_variable; }

int WitnessTerm::variable_index() const {
  if (!node_->is_variable) raise(Errc::Internal, "not a variable node");
  return node_->index;
}

const std::string& WitnessTerm::operation() const {
  if (node_->is_variable) raise(Errc::Internal, "variable has no operation");
  return node_->operation;
}

const std::vector<WitnessTerm>& WitnessTerm::arguments() const {
  return node_->arguments;
}

namespace {

std::size_t power(int base, int exponent) {
  std::size_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= static_cast<std::size_t>(base);
  return out;
}

bool next_tuple(std::vector<int>& tuple, int radix) {
  for (int i = static_cast<int>(tuple.size()) - 1; i >= 0; --i) {
    if (++tuple[i] < radix) return true;
    tuple[i] = 0;
  }
  return false;
}

std::vector<int> projection_table(int size, int arity, int variable) {
  std::vector<int> table(power(size, arity));
  std::vector<int> tuple(arity, 0);
  std::size_t index = 0;
  do {
    table[index++] = tuple[variable];
  } while (next_tuple(tuple, size));
  return table;
}

/// lhs/rhs evaluation of one identity at a collapsed assignment.
struct IdentityTables {
  const std::vector<int>* left = nullptr;
  const std::vector<int>* right = nullptr;  // null for projections
  int variable = -1;
};

}  // namespace

MaltsevCondition generate_condition(const LabeledGraph& premise,
                                    const LabeledGraph& conclusion) {
  if (!is_regular(premise)) {
    raise(Errc::RegularityViolation,
          "the premise graph has a label class with more than two vertices");
  }
  {
    std::set<std::string> glabels(premise.labels().begin(),
                                  premise.labels().end());
    std::set<std::string> hlabels(conclusion.labels().begin(),
                                  conclusion.labels().end());
    if (glabels != hlabels) {
      raise(Errc::LabelMismatch,
            "premise and conclusion graphs use different label sets");
    }
  }
  if (premise.distinguished().size() != conclusion.distinguished().size()) {
    raise(Errc::DistinguishedMismatch,
          "premise and conclusion graphs have different numbers of "
          "distinguished vertices");
  }

  MaltsevCondition condition;
  condition.arity = premise.vertex_count();
  condition.symbols.reserve(conclusion.vertex_count());
  for (int w = 0; w < conclusion.vertex_count(); ++w)
    condition.symbols.push_back("t" + std::to_string(w));

  std::vector<int> identity_map(condition.arity);
  std::iota(identity_map.begin(), identity_map.end(), 0);

  for (std::size_t pos = 0; pos < premise.distinguished().size(); ++pos) {
    ConditionIdentity identity;
    identity.kind = ConditionIdentity::Kind::Projection;
    identity.left_symbol = conclusion.distinguished()[pos];
    identity.variable = premise.distinguished()[pos];
    identity.collapse = identity_map;
    condition.identities.push_back(std::move(identity));
  }

  for (const auto& edge : conclusion.edges()) {
    ConditionIdentity identity;
    identity.kind = ConditionIdentity::Kind::Edge;
    identity.left_symbol = edge.u;
    identity.right_symbol = edge.v;
    identity.label = edge.label;
    identity.collapse.assign(condition.arity, 0);
    for (const auto& cls : label_classes(premise, edge.label))
      for (int member : cls) identity.collapse[member] = cls.front();
    condition.identities.push_back(std::move(identity));
  }
  return condition;
}

std::vector<int> witness_value_table(const FiniteAlgebra& algebra,
                                     const WitnessTerm& term, int arity) {
  if (term.is_variable()) {
    const int index = term.variable_index();
    if (index >= arity) {
      raise(Errc::Arity, "witness uses variable x" + std::to_string(index) +
                             " but the condition arity is " +
                             std::to_string(arity));
    }
    return projection_table(algebra.size(), arity, index);
  }
  const Operation* op = algebra.find_operation(term.operation());
  if (op == nullptr) {
    raise(Errc::UnknownOperation,
          "the algebra has no operation named '" + term.operation() + "'");
  }
  if (static_cast<int>(term.arguments().size()) != op->arity) {
    raise(Errc::Arity, "operation '" + op->name + "' expects " +
                           std::to_string(op->arity) + " arguments, got " +
                           std::to_string(term.arguments().size()));
  }
  std::vector<std::vector<int>> argument_tables;
  argument_tables.reserve(term.arguments().size());
  for (const auto& arg : term.arguments())
    argument_tables.push_back(witness_value_table(algebra, arg, arity));

  const std::size_t entries = power(algebra.size(), arity);
  std::vector<int> table(entries);
  std::vector<int> args(op->arity);
  for (std::size_t i = 0; i < entries; ++i) {
    for (std::size_t j = 0; j < argument_tables.size(); ++j)
      args[j] = argument_tables[j][i];
    table[i] = op->arity == 0 ? op->table[0] : algebra.apply(*op, args);
  }
  return table;
}

WitnessReport check_witnesses(const FiniteAlgebra& algebra,
                              const MaltsevCondition& condition,
                              const std::map<std::string, WitnessTerm>& terms) {
  std::vector<std::vector<int>> tables(condition.symbols.size());
  for (std::size_t s = 0; s < condition.symbols.size(); ++s) {
    auto it = terms.find(condition.symbols[s]);
    if (it == terms.end()) {
      raise(Errc::MissingSymbol,
            "no witness term for symbol '" + condition.symbols[s] + "'");
    }
    tables[s] = witness_value_table(algebra, it->second, condition.arity);
  }

  WitnessReport report;
  report.variety_note =
      "identities valid on the algebra persist to homomorphic images, "
      "subalgebras and products, hence to the variety it generates";

  const int n = algebra.size();
  std::vector<int> tuple(condition.arity, 0);
  std::vector<int> collapsed(condition.arity, 0);
  for (std::size_t idx = 0; idx < condition.identities.size(); ++idx) {
    const ConditionIdentity& identity = condition.identities[idx];
    std::fill(tuple.begin(), tuple.end(), 0);
    do {
      for (int j = 0; j < condition.arity; ++j)
        collapsed[j] = tuple[identity.collapse[j]];
      const std::size_t at = FiniteAlgebra::table_index(n, collapsed);
      const int lhs = tables[identity.left_symbol][at];
      const int rhs = identity.kind == ConditionIdentity::Kind::Projection
                          ? collapsed[identity.variable]
                          : tables[identity.right_symbol][at];
      if (lhs != rhs) {
        report.pass = false;
        report.counterexample = WitnessCounterexample{
            static_cast<int>(idx), collapsed, lhs, rhs};
        return report;
      }
    } while (next_tuple(tuple, n));
  }
  report.pass = true;
  return report;
}

namespace {

struct TableEntry {
  std::vector<int> table;
  WitnessTerm term;
  int depth = 0;
};

/// Generates term-operation tables breadth-first: round r applies every basic
/// operation to argument tuples that touch at least one round-(r-1) table.
/// DepthBounded stops after `depth` rounds, ExhaustiveClone at the fixpoint.
std::vector<TableEntry> generate_tables(const FiniteAlgebra& algebra,
                                        int arity, const SearchOptions& options,
                                        const Caps& caps, bool& complete) {
  std::vector<TableEntry> entries;
  std::set<std::vector<int>> seen;
  for (int v = 0; v < arity; ++v) {
    TableEntry entry{projection_table(algebra.size(), arity, v),
                     WitnessTerm::variable(v), 0};
    if (seen.insert(entry.table).second) entries.push_back(std::move(entry));
  }

  complete = false;
  std::size_t previous_round_start = 0;
  int round = 0;
  while (true) {
    if (options.mode == SearchOptions::Mode::DepthBounded &&
        round >= options.depth)
      return entries;
    const std::size_t round_start = entries.size();
    bool grew = false;
    for (const auto& op : algebra.operations()) {
      if (op.arity == 0) {
        std::vector<int> table(power(algebra.size(), arity), op.table[0]);
        if (round == 0 && seen.insert(table).second) {
          entries.push_back({std::move(table), WitnessTerm::apply(op.name, {}),
                             round + 1});
          grew = true;
        }
        continue;
      }
      std::vector<std::size_t> pick(op.arity, 0);
      while (true) {
        // At least one argument from the previous round, else this tuple was
        // already tried.
        const std::size_t newest = *std::max_element(pick.begin(), pick.end());
        if (round == 0 || newest >= previous_round_start) {
          std::vector<int> table(power(algebra.size(), arity));
          std::vector<int> args(op.arity);
          for (std::size_t i = 0; i < table.size(); ++i) {
            for (int j = 0; j < op.arity; ++j)
              args[j] = entries[pick[j]].table[i];
            table[i] = algebra.apply(op, args);
          }
          if (seen.insert(table).second) {
            if (static_cast<std::int64_t>(entries.size()) + 1 >
                caps.max_clone) {
              raise(Errc::CapExceeded,
                    "term-operation generation exceeded the cap of " +
                        std::to_string(caps.max_clone) + " tables");
            }
            std::vector<WitnessTerm> sub;
            sub.reserve(op.arity);
            for (int j = 0; j < op.arity; ++j)
              sub.push_back(entries[pick[j]].term);
            entries.push_back({std::move(table),
                               WitnessTerm::apply(op.name, std::move(sub)),
                               round + 1});
            grew = true;
          }
        }
        int i = op.arity - 1;
        for (; i >= 0; --i) {
          if (++pick[i] < round_start) break;
          pick[i] = 0;
        }
        if (i < 0) break;
      }
    }
    if (!grew) {
      complete = true;
      return entries;
    }
    previous_round_start = round_start;
    ++round;
  }
}

}  // namespace

SearchResult bounded_term_search(const FiniteAlgebra& algebra,
                                 const MaltsevCondition& condition,
                                 const SearchOptions& options,
                                 const Caps& caps) {
  bool complete = false;
  std::vector<TableEntry> entries =
      generate_tables(algebra, condition.arity, options, caps, complete);

  SearchResult result;
  result.table_count = static_cast<std::int64_t>(entries.size());
  const auto not_found = [&]() {
    result.status = complete && options.mode == SearchOptions::Mode::ExhaustiveClone
                        ? SearchStatus::NotFoundDefinitive
                        : SearchStatus::Inconclusive;
    return result;
  };

  const int n = algebra.size();
  const int symbol_count = static_cast<int>(condition.symbols.size());

  // Projection identities pin their symbol to an exact table.
  std::vector<int> forced(symbol_count, -1);  // entry index or -1
  std::map<std::vector<int>, int> entry_by_table;
  for (std::size_t i = 0; i < entries.size(); ++i)
    entry_by_table.emplace(entries[i].table, static_cast<int>(i));

  for (const auto& identity : condition.identities) {
    if (identity.kind != ConditionIdentity::Kind::Projection) continue;
    const auto table = projection_table(n, condition.arity, identity.variable);
    const auto found = entry_by_table.find(table);
    if (found == entry_by_table.end()) {
      raise(Errc::Internal, "projection table missing from the generated set");
    }
    int& slot = forced[identity.left_symbol];
    if (slot != -1 && entries[slot].table != table) return not_found();
    slot = found->second;
  }

  // Candidates in canonical value-table order.
  std::vector<int> candidate_order(entries.size());
  std::iota(candidate_order.begin(), candidate_order.end(), 0);
  std::sort(candidate_order.begin(), candidate_order.end(),
            [&](int a, int b) { return entries[a].table < entries[b].table; });

  // Edge identities grouped per symbol for incremental checking; identities
  // are checked on the collapsed subspace only (representative coordinates).
  struct EdgeCheck {
    int other = -1;
    std::vector<int> collapse;
  };
  std::vector<std::vector<EdgeCheck>> edges_of(symbol_count);
  for (const auto& identity : condition.identities) {
    if (identity.kind != ConditionIdentity::Kind::Edge) continue;
    edges_of[identity.left_symbol].push_back(
        {identity.right_symbol, identity.collapse});
    edges_of[identity.right_symbol].push_back(
        {identity.left_symbol, identity.collapse});
  }

  const auto collapsed_equal = [&](const std::vector<int>& lhs,
                                   const std::vector<int>& rhs,
                                   const std::vector<int>& collapse) {
    std::vector<int> representatives;
    for (int j = 0; j < condition.arity; ++j)
      if (collapse[j] == j) representatives.push_back(j);
    std::vector<int> values(representatives.size(), 0);
    std::vector<int> point(condition.arity, 0);
    do {
      for (int j = 0; j < condition.arity; ++j) {
        const auto rep =
            std::find(representatives.begin(), representatives.end(),
                      collapse[j]) -
            representatives.begin();
        point[j] = values[rep];
      }
      const std::size_t at = FiniteAlgebra::table_index(n, point);
      if (lhs[at] != rhs[at]) return false;
    } while (next_tuple(values, n));
    return true;
  };

  std::vector<int> chosen(symbol_count, -1);
  for (int s = 0; s < symbol_count; ++s) chosen[s] = forced[s];

  // Order the free symbols most-constrained-first.
  std::vector<int> free_symbols;
  for (int s = 0; s < symbol_count; ++s)
    if (chosen[s] == -1) free_symbols.push_back(s);
  std::sort(free_symbols.begin(), free_symbols.end(), [&](int a, int b) {
    if (edges_of[a].size() != edges_of[b].size())
      return edges_of[a].size() > edges_of[b].size();
    return a < b;
  });

  std::int64_t attempts = 0;
  const auto consistent_so_far = [&](int symbol) {
    for (const auto& check : edges_of[symbol]) {
      if (chosen[check.other] == -1) continue;
      if (++attempts > caps.max_evals) {
        raise(Errc::CapExceeded,
              "witness search exceeded the evaluation cap of " +
                  std::to_string(caps.max_evals));
      }
      if (!collapsed_equal(entries[chosen[symbol]].table,
                           entries[chosen[check.other]].table, check.collapse))
        return false;
    }
    return true;
  };

  // Forced symbols may already clash on their mutual edges.
  for (int s = 0; s < symbol_count; ++s)
    if (chosen[s] != -1 && !consistent_so_far(s)) return not_found();

  auto assign = [&](auto&& self, std::size_t at) -> bool {
    if (at == free_symbols.size()) return true;
    const int symbol = free_symbols[at];
    for (int candidate : candidate_order) {
      chosen[symbol] = candidate;
      if (consistent_so_far(symbol) && self(self, at + 1)) return true;
      chosen[symbol] = -1;
    }
    return false;
  };

  if (!assign(assign, 0)) return not_found();

  result.status = SearchStatus::Found;
  for (int s = 0; s < symbol_count; ++s)
    result.assignment.emplace(condition.symbols[s], entries[chosen[s]].term);
  return result;
}

}  // namespace tolkit
