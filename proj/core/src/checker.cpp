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

#include "tolkit/checker.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tolkit/errors.hpp"

namespace tolkit {

namespace {

std::vector<std::string> common_variables(const Term& premise,
                                          const Term& conclusion) {
  const auto p_vars = term_variables(premise);
  const auto q_vars = term_variables(conclusion);
  if (p_vars != q_vars) {
    raise(Errc::VariableMismatch,
          "premise and conclusion must use the same variable set");
  }
  return p_vars;
}

std::int64_t checked_power(std::size_t base, std::size_t exponent,
                           std::int64_t limit) {
  std::int64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > limit / static_cast<std::int64_t>(base)) {
      return limit + 1;
    }
    out *= static_cast<std::int64_t>(base);
  }
  return out;
}

void require_eval_budget(std::size_t set_size, std::size_t variable_count,
                         const Caps& caps) {
  const std::int64_t total =
      checked_power(set_size, variable_count, caps.max_evals);
  if (total > caps.max_evals) {
    raise(Errc::CapExceeded,
          "quantifier sweep needs " + std::to_string(set_size) + "^" +
              std::to_string(variable_count) +
              " evaluations, above the cap of " +
              std::to_string(caps.max_evals) +
              "; rerun with a higher --max-evals or use sampling");
  }
}

std::optional<std::vector<int>> first_missing_pair(const BinaryRelation& lhs,
                                                   const BinaryRelation& rhs) {
  for (int a = 0; a < lhs.size(); ++a)
    for (int b = 0; b < lhs.size(); ++b)
      if (lhs.contains(a, b) && !rhs.contains(a, b))
        return std::vector<int>{a, b};
  return std::nullopt;
}

}  // namespace

std::vector<BinaryRelation> binding_scan_order(
    std::vector<BinaryRelation> relations) {
  std::sort(relations.begin(), relations.end(), &BinaryRelation::scan_before);
  return relations;
}

InclusionVerdict check_term_inclusion(
    const FiniteAlgebra& algebra, const Term& premise, const Term& conclusion,
    const std::vector<BinaryRelation>& relations, const Caps& caps) {
  const auto variables = common_variables(premise, conclusion);
  for (const auto& r : relations) {
    if (r.size() != algebra.size()) {
      raise(Errc::SizeMismatch,
            "binding set contains a relation on the wrong universe");
    }
  }
  InclusionVerdict verdict;
  verdict.holds = true;
  if (relations.empty()) return verdict;
  require_eval_budget(relations.size(), variables.size(), caps);

  std::vector<std::size_t> pick(variables.size(), 0);
  std::map<std::string, BinaryRelation> bindings;
  while (true) {
    bindings.clear();
    for (std::size_t i = 0; i < variables.size(); ++i)
      bindings.emplace(variables[i], relations[pick[i]]);
    ++verdict.tuples_checked;
    const BinaryRelation lhs = eval_term(premise, bindings);
    const BinaryRelation rhs = eval_term(conclusion, bindings);
    if (auto missing = first_missing_pair(lhs, rhs)) {
      verdict.holds = false;
      verdict.counterexample =
          InclusionCounterexample{bindings, std::move(*missing)};
      return verdict;
    }
    // Last variable fastest; the first variable is the outermost loop.
    int i = static_cast<int>(pick.size()) - 1;
    for (; i >= 0; --i) {
      if (++pick[i] < relations.size()) break;
      pick[i] = 0;
    }
    if (i < 0) break;
  }
  return verdict;
}

InclusionVerdict check_congruence_inclusion(const FiniteAlgebra& algebra,
                                            const Term& premise,
                                            const Term& conclusion,
                                            const Caps& caps) {
  auto congruences = binding_scan_order(
      enumerate_closed(algebra, ClosureMode::Congruence, caps));
  return check_term_inclusion(algebra, premise, conclusion, congruences, caps);
}

InclusionVerdict check_nest_inclusion(const FiniteAlgebra& algebra,
                                      const Term& premise,
                                      const Term& conclusion,
                                      const std::vector<BinaryRelation>& nest_set,
                                      const Caps& caps) {
  return check_term_inclusion(algebra, premise, conclusion,
                              binding_scan_order(nest_set), caps);
}

InclusionVerdict check_nest_inclusion(const FiniteAlgebra& algebra,
                                      const Term& premise,
                                      const Term& conclusion, const Caps& caps) {
  const ToleranceCatalog catalog = nest_representable_set(algebra, caps);
  return check_nest_inclusion(algebra, premise, conclusion, catalog.nest_set(),
                              caps);
}

InclusionVerdict check_graph_inclusion(const FiniteAlgebra& algebra,
                                       const LabeledGraph& premise,
                                       const LabeledGraph& conclusion,
                                       GraphCheckMode mode, const Caps& caps) {
  {
    std::set<std::string> g(premise.labels().begin(), premise.labels().end());
    std::set<std::string> h(conclusion.labels().begin(),
                            conclusion.labels().end());
    if (g != h) {
      raise(Errc::LabelMismatch,
            "premise and conclusion graphs use different label sets");
    }
  }
  if (premise.distinguished().size() != conclusion.distinguished().size()) {
    raise(Errc::DistinguishedMismatch,
          "premise and conclusion graphs have different numbers of "
          "distinguished vertices");
  }

  std::vector<BinaryRelation> relations;
  if (mode == GraphCheckMode::Congruences) {
    relations = enumerate_closed(algebra, ClosureMode::Congruence, caps);
  } else {
    relations = nest_representable_set(algebra, caps).nest_set();
  }
  relations = binding_scan_order(std::move(relations));

  std::vector<std::string> labels(premise.labels().begin(),
                                  premise.labels().end());
  std::sort(labels.begin(), labels.end());

  InclusionVerdict verdict;
  verdict.holds = true;
  if (relations.empty()) return verdict;
  require_eval_budget(relations.size(), labels.size(), caps);

  std::vector<std::size_t> pick(labels.size(), 0);
  std::map<std::string, BinaryRelation> bindings;
  while (true) {
    bindings.clear();
    for (std::size_t i = 0; i < labels.size(); ++i)
      bindings.emplace(labels[i], relations[pick[i]]);
    ++verdict.tuples_checked;
    const TupleRelation lhs = eval_graph(premise, bindings);
    const TupleRelation rhs = eval_graph(conclusion, bindings);
    if (!lhs.subset_of(rhs)) {
      for (const auto& tuple : lhs.tuples()) {
        if (!rhs.contains(tuple)) {
          verdict.holds = false;
          verdict.counterexample = InclusionCounterexample{bindings, tuple};
          return verdict;
        }
      }
    }
    int i = static_cast<int>(pick.size()) - 1;
    for (; i >= 0; --i) {
      if (++pick[i] < relations.size()) break;
      pick[i] = 0;
    }
    if (i < 0) break;
  }
  return verdict;
}

InclusionVerdict sample_term_inclusion(
    const FiniteAlgebra& algebra, const Term& premise, const Term& conclusion,
    const std::vector<BinaryRelation>& relations, int samples,
    std::uint64_t seed) {
  const auto variables = common_variables(premise, conclusion);
  for (const auto& r : relations) {
    if (r.size() != algebra.size()) {
      raise(Errc::SizeMismatch,
            "binding set contains a relation on the wrong universe");
    }
  }
  InclusionVerdict verdict;
  verdict.holds = true;
  verdict.exhaustive = false;
  if (relations.empty() || samples <= 0) return verdict;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dist(0, relations.size() - 1);
  std::map<std::string, BinaryRelation> bindings;
  for (int s = 0; s < samples; ++s) {
    bindings.clear();
    for (const auto& name : variables)
      bindings.emplace(name, relations[dist(rng)]);
    ++verdict.tuples_checked;
    const BinaryRelation lhs = eval_term(premise, bindings);
    const BinaryRelation rhs = eval_term(conclusion, bindings);
    if (auto missing = first_missing_pair(lhs, rhs)) {
      verdict.holds = false;
      verdict.counterexample =
          InclusionCounterexample{bindings, std::move(*missing)};
      return verdict;
    }
  }
  return verdict;
}

std::string_view maltsev_status_name(MaltsevStatus status) {
  switch (status) {
    case MaltsevStatus::Certified:
      return "certified";
    case MaltsevStatus::DefinitivelyAbsent:
      return "definitively-absent";
    case MaltsevStatus::Inconclusive:
      return "inconclusive";
    case MaltsevStatus::NotRun:
      return "not-run";
  }
  return "unknown";
}

TheoremReport theorem_report(const FiniteAlgebra& algebra,
                             std::string algebra_id, const Term& premise,
                             const Term& conclusion,
                             const TheoremOptions& options, const Caps& caps) {
  common_variables(premise, conclusion);

  TheoremReport report;
  report.algebra_id = std::move(algebra_id);
  report.premise = render_term(premise);
  report.conclusion = render_term(conclusion);
  report.premise_has_plus = contains_plus(premise);
  report.conclusion_has_plus = contains_plus(conclusion);

  // Regularity gate: a PLUS-free premise must itself be regular; otherwise
  // p3 or p4 must be.
  Term premise_used = premise;
  if (!report.premise_has_plus) {
    if (!is_regular_term(premise)) {
      raise(Errc::RegularityViolation,
            "premise '" + report.premise + "' is not regular");
    }
    report.regularity_checked = "p";
    report.premise_factors = 0;
  } else {
    const Term p3 = plus_substitute(premise, 3);
    const Term p4 = plus_substitute(premise, 4);
    if (is_regular_term(p3)) {
      premise_used = p3;
      report.premise_factors = 3;
      report.regularity_checked = "p3";
    } else if (is_regular_term(p4)) {
      premise_used = p4;
      report.premise_factors = 4;
      report.regularity_checked = "p4";
    } else {
      raise(Errc::RegularityViolation,
            "neither p3 nor p4 of premise '" + report.premise +
                "' is regular");
    }
  }
  report.premise_used = render_term(premise_used);

  const int conclusion_factors =
      options.conclusion_factors.value_or(
          report.premise_factors > 0 ? report.premise_factors : 3);
  Term conclusion_for_condition = conclusion;
  if (report.conclusion_has_plus) {
    conclusion_for_condition = plus_substitute(conclusion, conclusion_factors);
    report.conclusion_factors = conclusion_factors;
  }
  report.conclusion_for_condition = render_term(conclusion_for_condition);

  // Verdicts: the premise at its regular PLUS-free form, the conclusion with
  // '+' evaluated exactly (finite universes compute the join exactly).
  const ToleranceCatalog catalog =
      nest_representable_set(algebra, caps, report.algebra_id);
  report.congruence =
      check_congruence_inclusion(algebra, premise_used, conclusion, caps);
  report.nest = check_nest_inclusion(algebra, premise_used, conclusion,
                                     catalog.nest_set(), caps);

  const MaltsevCondition condition = generate_condition(
      graph_of_term(premise_used), graph_of_term(conclusion_for_condition));

  report.maltsev = MaltsevStatus::NotRun;
  report.maltsev_source = "none";
  if (options.witness) {
    const WitnessReport witness_report =
        check_witnesses(algebra, condition, *options.witness);
    report.maltsev_source = "witness-file";
    if (witness_report.pass) {
      report.maltsev = MaltsevStatus::Certified;
      report.maltsev_witness = *options.witness;
    } else {
      report.maltsev = MaltsevStatus::Inconclusive;
      report.maltsev_counterexample = witness_report.counterexample;
    }
  }
  if (report.maltsev != MaltsevStatus::Certified && options.search) {
    const SearchResult search =
        bounded_term_search(algebra, condition, *options.search, caps);
    report.maltsev_source =
        options.search->mode == SearchOptions::Mode::ExhaustiveClone
            ? "search-clone"
            : "search-depth";
    report.clone_tables = search.table_count;
    switch (search.status) {
      case SearchStatus::Found:
        report.maltsev = MaltsevStatus::Certified;
        report.maltsev_witness = search.assignment;
        break;
      case SearchStatus::NotFoundDefinitive:
        report.maltsev = MaltsevStatus::DefinitivelyAbsent;
        break;
      case SearchStatus::Inconclusive:
        report.maltsev = MaltsevStatus::Inconclusive;
        break;
    }
  }

  // Algebra-local implication chain: a certified condition forces the nest
  // verdict, and every congruence is nest-representable, so the nest verdict
  // forces the congruence one. A violation is an internal failure.
  if (report.maltsev == MaltsevStatus::Certified && !report.nest.holds) {
    raise(Errc::Internal,
          "certified Maltsev witnesses but the nest-tolerance inclusion "
          "fails; the implication chain is broken");
  }
  if (report.nest.holds && !report.congruence.holds) {
    raise(Errc::Internal,
          "nest-tolerance inclusion holds but the congruence inclusion "
          "fails; the implication chain is broken");
  }
  report.consistent = true;
  report.scope_note =
      "verdicts are algebra-level; a certified witness transfers to the "
      "generated variety, but no variety-level certificate is claimed";
  return report;
}

}  // namespace tolkit
