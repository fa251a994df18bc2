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

#include "tolkit/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tolkit/errors.hpp"

namespace tolkit {

struct Term::Node {
  bool is_variable = false;
  std::string name;
  TermOp op = TermOp::Compose;
  std::shared_ptr<const Node> left, right;
};

Term Term::variable(std::string name) {
  auto node = std::make_shared<Node>();
  node->is_variable = true;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::node(TermOp op, Term left, Term right) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->left = std::move(left.node_);
  node->right = std::move(right.node_);
  return Term(std::move(node));
}

bool Term::is_variable() const { return node_->is_variable; }

const std::string& Term::variable_name() const {
  if (!node_->is_variable) raise(Errc::Internal, "not a variable node");
  return node_->name;
}

TermOp Term::op() const {
  if (node_->is_variable) raise(Errc::Internal, "variable node has no operator");
  return node_->op;
}

Term Term::left() const { return Term(node_->left); }
Term Term::right() const { return Term(node_->right); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_variable() != b.is_variable()) return false;
  if (a.is_variable()) return a.variable_name() == b.variable_name();
  return a.op() == b.op() && a.left() == b.left() && a.right() == b.right();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view source) : source_(source) {}

  Term parse() {
    Term term = parse_sum();
    skip_spaces();
    if (pos_ != source_.size()) fail("unexpected trailing input");
    return term;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    raise(Errc::Parse, what + " at position " + std::to_string(pos_));
  }

  void skip_spaces() {
    while (pos_ < source_.size() &&
           std::isspace(static_cast<unsigned char>(source_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_spaces();
    if (pos_ < source_.size() && source_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Term parse_sum() {
    Term term = parse_comp();
    while (eat('+')) term = Term::node(TermOp::Plus, term, parse_comp());
    return term;
  }

  Term parse_comp() {
    Term term = parse_meet();
    while (eat(';')) term = Term::node(TermOp::Compose, term, parse_meet());
    return term;
  }

  Term parse_meet() {
    Term term = parse_atom();
    while (eat('&')) term = Term::node(TermOp::Meet, term, parse_atom());
    return term;
  }

  Term parse_atom() {
    skip_spaces();
    if (pos_ >= source_.size()) fail("expected a variable or '('");
    if (eat('(')) {
      Term term = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return term;
    }
    const char head = source_[pos_];
    if (!std::isalpha(static_cast<unsigned char>(head)))
      fail("expected a variable or '('");
    std::string name(1, head);
    ++pos_;
    while (pos_ < source_.size() &&
           std::isdigit(static_cast<unsigned char>(source_[pos_]))) {
      name.push_back(source_[pos_]);
      ++pos_;
    }
    return Term::variable(std::move(name));
  }

  std::string_view source_;
  std::size_t pos_ = 0;
};

int precedence(TermOp op) {
  switch (op) {
    case TermOp::Plus:
      return 0;
    case TermOp::Compose:
      return 1;
    case TermOp::Meet:
      return 2;
  }
  return 0;
}

char symbol(TermOp op) {
  switch (op) {
    case TermOp::Plus:
      return '+';
    case TermOp::Compose:
      return ';';
    case TermOp::Meet:
      return '&';
  }
  return '?';
}

// `limit` is the lowest precedence printable without parentheses here.
void render(const Term& term, int limit, std::string& out) {
  if (term.is_variable()) {
    out += term.variable_name();
    return;
  }
  const int prec = precedence(term.op());
  const bool parens = prec < limit;
  if (parens) out += '(';
  render(term.left(), prec, out);
  out += symbol(term.op());
  render(term.right(), prec + 1, out);  // left-associative
  if (parens) out += ')';
}

void collect_variables(const Term& term, std::set<std::string>& names) {
  if (term.is_variable()) {
    names.insert(term.variable_name());
    return;
  }
  collect_variables(term.left(), names);
  collect_variables(term.right(), names);
}

}  // namespace

Term parse_term(std::string_view source) { return Parser(source).parse(); }

std::string render_term(const Term& term) {
  std::string out;
  render(term, 0, out);
  return out;
}

Term plus_substitute(const Term& term, int factors) {
  if (factors < 1) {
    raise(Errc::Range, "the alternating substitution needs at least 1 factor");
  }
  if (term.is_variable()) return term;
  Term left = plus_substitute(term.left(), factors);
  Term right = plus_substitute(term.right(), factors);
  if (term.op() != TermOp::Plus) return Term::node(term.op(), left, right);
  Term out = left;
  for (int i = 1; i < factors; ++i)
    out = Term::node(TermOp::Compose, out, i % 2 == 1 ? right : left);
  return out;
}

BinaryRelation eval_term(
    const Term& term, const std::map<std::string, BinaryRelation>& bindings) {
  if (term.is_variable()) {
    auto it = bindings.find(term.variable_name());
    if (it == bindings.end()) {
      raise(Errc::UnboundVariable,
            "variable '" + term.variable_name() + "' has no binding");
    }
    return it->second;
  }
  BinaryRelation left = eval_term(term.left(), bindings);
  BinaryRelation right = eval_term(term.right(), bindings);
  switch (term.op()) {
    case TermOp::Compose:
      return compose(left, right);
    case TermOp::Meet:
      return meet(left, right);
    case TermOp::Plus:
      return plus_join(left, right);
  }
  raise(Errc::Internal, "unreachable term operator");
}

std::vector<std::string> term_variables(const Term& term) {
  std::set<std::string> names;
  collect_variables(term, names);
  return {names.begin(), names.end()};
}

bool contains_plus(const Term& term) {
  if (term.is_variable()) return false;
  if (term.op() == TermOp::Plus) return true;
  return contains_plus(term.left()) || contains_plus(term.right());
}

}  // namespace tolkit
