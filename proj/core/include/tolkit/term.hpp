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

#ifndef TOLKIT_TERM_HPP
#define TOLKIT_TERM_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tolkit/relation.hpp"

namespace tolkit {

enum class TermOp { Compose, Meet, Plus };

/// Immutable term over relation variables in the connectives ∘ (written `;`),
/// ∩ (written `&`) and + . Nodes are shared, so copies are cheap.
///
/// Concrete syntax, loosest to tightest, all left-associative:
///   term := sum;  sum := comp ('+' comp)*;  comp := meet (';' meet)*;
///   meet := atom ('&' atom)*;  atom := NAME | '(' term ')'
/// Variable names are a letter followed by digits.
class Term {
 public:
  static Term variable(std::string name);
  static Term node(TermOp op, Term left, Term right);

  bool is_variable() const;
  const std::string& variable_name() const;  // variable nodes only
  TermOp op() const;                         // inner nodes only
  Term left() const;
  Term right() const;

  /// Structural equality.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the concrete syntax; Errc::Parse diagnostics carry the 0-based
/// offset of the offending character.
Term parse_term(std::string_view source);

/// Minimal-parentheses rendering; reparsing the output yields an equal tree.
std::string render_term(const Term& term);

/// Replaces every PLUS node L + R (bottom-up) by the explicit alternating
/// composition L;R;L;... with `factors` relation factors (1 yields L alone).
Term plus_substitute(const Term& term, int factors);

/// Structural evaluation: COMPOSE -> compose, MEET -> meet, PLUS -> plus_join.
BinaryRelation eval_term(const Term& term,
                         const std::map<std::string, BinaryRelation>& bindings);

/// Sorted duplicate-free variable list.
std::vector<std::string> term_variables(const Term& term);

bool contains_plus(const Term& term);

}  // namespace tolkit

#endif  // TOLKIT_TERM_HPP
