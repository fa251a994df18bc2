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

// Command-line surface: validate, classify, eval, check, graph
// {of-term,regular,eval}, maltsev {gen,check,search}, theorem.
//
// Exit codes: 0 success / property holds; 1 property fails (a counterexample
// or a definitive search miss); 2 usage, parse or validation error;
// 3 resource cap exceeded. Machine output is JSON on stdout (or --out FILE);
// human summaries are stdout lines prefixed with '#'.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tolkit/caps.hpp"
#include "tolkit/checker.hpp"
#include "tolkit/errors.hpp"
#include "tolkit/json_io.hpp"

namespace {

using nlohmann::json;
using namespace tolkit;

json reparse(const std::string& text) { return json::parse(text); }

template <typename Saver, typename Value>
json to_json(Saver&& saver, const Value& value) {
  std::ostringstream buffer;
  saver(buffer, value);
  return reparse(buffer.str());
}

void emit(const json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) raise(Errc::Io, "cannot write '" + out_path + "'");
  out << text;
}

void note(const std::string& line) { std::cout << "# " << line << "\n"; }

std::map<std::string, BinaryRelation> parse_bindings(
    const std::vector<std::string>& raw) {
  std::map<std::string, BinaryRelation> bindings;
  for (const auto& item : raw) {
    const auto split = item.find('=');
    if (split == std::string::npos || split == 0) {
      raise(Errc::Io, "binding '" + item + "' is not NAME=RELFILE");
    }
    bindings.insert_or_assign(item.substr(0, split),
                              load_relation_file(item.substr(split + 1)));
  }
  return bindings;
}

struct CommonPaths {
  std::string algebra;
  std::string out;
};

int run(int argc, char** argv) {
  CLI::App app{"tolerance identities on finite algebras"};
  app.require_subcommand(1);

  Caps caps = caps_from_env();
  app.add_option("--max-size", caps.max_universe,
                 "largest universe accepted by enumeration");
  app.add_option("--max-set", caps.max_set,
                 "largest enumerated relation set");
  app.add_option("--max-evals", caps.max_evals,
                 "largest quantifier sweep before erroring");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check an algebra file");
  CommonPaths validate_opts;
  validate_cmd->add_option("algebra", validate_opts.algebra, "algebra JSON file")
      ->required();

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "classify every tolerance of an algebra");
  CommonPaths classify_opts;
  classify_cmd->add_option("algebra", classify_opts.algebra, "algebra JSON file")
      ->required();
  classify_cmd->add_option("--out", classify_opts.out, "write the catalog here");

  // eval
  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate a term on bound relations");
  CommonPaths eval_opts;
  std::string eval_term_source;
  std::vector<std::string> eval_binds;
  eval_cmd->add_option("algebra", eval_opts.algebra, "algebra JSON file")
      ->required();
  eval_cmd->add_option("--term", eval_term_source, "term, e.g. \"a;b\"")
      ->required();
  eval_cmd->add_option("--bind", eval_binds, "NAME=RELFILE (repeatable)");
  eval_cmd->add_option("--out", eval_opts.out, "write the result here");

  // check
  auto* check_cmd =
      app.add_subcommand("check", "check p ⊆ q over congruences or nest "
                                  "tolerances");
  CommonPaths check_opts;
  std::string check_p, check_q, check_mode = "both";
  int check_samples = 0;
  std::uint64_t check_seed = 0;
  check_cmd->add_option("algebra", check_opts.algebra, "algebra JSON file")
      ->required();
  check_cmd->add_option("-p", check_p, "premise term")->required();
  check_cmd->add_option("-q", check_q, "conclusion term")->required();
  check_cmd->add_option("--mode", check_mode, "congruences|nest|both")
      ->check(CLI::IsMember({"congruences", "nest", "both"}));
  check_cmd->add_option("--sample", check_samples,
                        "spot-check this many random binding tuples instead "
                        "of the exhaustive sweep");
  check_cmd->add_option("--seed", check_seed, "sampling seed");
  check_cmd->add_option("--out", check_opts.out, "write the verdicts here");

  // graph of-term | regular | eval
  auto* graph_cmd = app.add_subcommand("graph", "labeled-graph operations");
  graph_cmd->require_subcommand(1);

  auto* graph_of_term_cmd =
      graph_cmd->add_subcommand("of-term", "graph of a PLUS-free term");
  std::string graph_term_source, graph_out;
  graph_of_term_cmd->add_option("--term", graph_term_source, "term")->required();
  graph_of_term_cmd->add_option("--out", graph_out, "write the graph here");

  auto* graph_regular_cmd =
      graph_cmd->add_subcommand("regular", "regularity of a term or graph");
  std::string regular_term_source, regular_graph_path;
  graph_regular_cmd->add_option("--term", regular_term_source, "term");
  graph_regular_cmd->add_option("--graph", regular_graph_path, "graph file");

  auto* graph_eval_cmd =
      graph_cmd->add_subcommand("eval", "evaluate G(R1, ..., Rn)");
  std::string graph_eval_path, graph_eval_out;
  std::vector<std::string> graph_eval_binds;
  graph_eval_cmd->add_option("--graph", graph_eval_path, "graph file")
      ->required();
  graph_eval_cmd->add_option("--bind", graph_eval_binds,
                             "LABEL=RELFILE (repeatable)");
  graph_eval_cmd->add_option("--out", graph_eval_out, "write the tuples here");

  // maltsev gen | check | search
  auto* maltsev_cmd = app.add_subcommand("maltsev", "Maltsev conditions");
  maltsev_cmd->require_subcommand(1);

  auto* maltsev_gen_cmd =
      maltsev_cmd->add_subcommand("gen", "generate M(G,H) from terms or graphs");
  std::string gen_p, gen_q, gen_premise_graph, gen_conclusion_graph, gen_out;
  int gen_pn = 0, gen_qn = 0;
  maltsev_gen_cmd->add_option("-p", gen_p, "premise term");
  maltsev_gen_cmd->add_option("-q", gen_q, "conclusion term");
  maltsev_gen_cmd->add_option("-G,--premise-graph", gen_premise_graph,
                              "premise graph file");
  maltsev_gen_cmd->add_option("-H,--conclusion-graph", gen_conclusion_graph,
                              "conclusion graph file");
  maltsev_gen_cmd->add_option(
      "--pn", gen_pn, "expand '+' in the premise with this many factors");
  maltsev_gen_cmd->add_option(
      "--qn", gen_qn, "expand '+' in the conclusion with this many factors");
  maltsev_gen_cmd->add_option("--out", gen_out, "write the condition here");

  auto* maltsev_check_cmd =
      maltsev_cmd->add_subcommand("check", "check witness terms");
  CommonPaths maltsev_check_opts;
  std::string maltsev_check_condition, maltsev_check_witness;
  maltsev_check_cmd
      ->add_option("algebra", maltsev_check_opts.algebra, "algebra JSON file")
      ->required();
  maltsev_check_cmd
      ->add_option("--condition", maltsev_check_condition, "condition file")
      ->required();
  maltsev_check_cmd
      ->add_option("--witness", maltsev_check_witness, "witness file")
      ->required();
  maltsev_check_cmd->add_option("--out", maltsev_check_opts.out,
                                "write the report here");

  auto* maltsev_search_cmd =
      maltsev_cmd->add_subcommand("search", "search for witness terms");
  CommonPaths maltsev_search_opts;
  std::string maltsev_search_condition, maltsev_search_mode = "depth";
  int maltsev_search_depth = 3;
  maltsev_search_cmd
      ->add_option("algebra", maltsev_search_opts.algebra, "algebra JSON file")
      ->required();
  maltsev_search_cmd
      ->add_option("--condition", maltsev_search_condition, "condition file")
      ->required();
  maltsev_search_cmd->add_option("--mode", maltsev_search_mode, "depth|clone")
      ->check(CLI::IsMember({"depth", "clone"}));
  maltsev_search_cmd->add_option("--depth", maltsev_search_depth,
                                 "depth bound for --mode depth");
  maltsev_search_cmd->add_option("--out", maltsev_search_opts.out,
                                 "write the result here");

  // theorem
  auto* theorem_cmd = app.add_subcommand(
      "theorem", "regularity gate, both inclusion checks and the Maltsev "
                 "machinery in one report");
  CommonPaths theorem_opts;
  std::string theorem_p, theorem_q, theorem_witness, theorem_search;
  int theorem_depth = 3, theorem_qn = 0;
  theorem_cmd->add_option("algebra", theorem_opts.algebra, "algebra JSON file")
      ->required();
  theorem_cmd->add_option("-p", theorem_p, "premise term")->required();
  theorem_cmd->add_option("-q", theorem_q, "conclusion term")->required();
  theorem_cmd->add_option("--witness", theorem_witness, "witness file");
  theorem_cmd->add_option("--search", theorem_search, "depth|clone")
      ->check(CLI::IsMember({"depth", "clone"}));
  theorem_cmd->add_option("--depth", theorem_depth,
                          "depth bound for --search depth");
  theorem_cmd->add_option("--qn", theorem_qn,
                          "expand '+' in the conclusion with this many "
                          "factors for condition generation");
  theorem_cmd->add_option("--out", theorem_opts.out, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the diagnostic
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand(validate_cmd)) {
    const FiniteAlgebra algebra = load_algebra_file(validate_opts.algebra);
    note("algebra '" + validate_opts.algebra + "' is valid: size " +
         std::to_string(algebra.size()) + ", " +
         std::to_string(algebra.operations().size()) + " operations");
    emit(json{{"valid", true},
              {"size", algebra.size()},
              {"operations", algebra.operations().size()}},
         "");
    return 0;
  }

  if (app.got_subcommand(classify_cmd)) {
    const FiniteAlgebra algebra = load_algebra_file(classify_opts.algebra);
    const ToleranceCatalog catalog =
        nest_representable_set(algebra, caps, classify_opts.algebra);
    int congruences = 0, representable = 0, weakly = 0, nest = 0;
    int nest_only = 0;
    for (const auto& entry : catalog.entries) {
      congruences += entry.is_congruence;
      representable += entry.representable_witness.has_value();
      weakly += entry.weakly_representable;
      nest += entry.nest_derivation.has_value();
      nest_only += entry.nest_derivation.has_value() && !entry.weakly_representable;
    }
    note(std::to_string(catalog.entries.size()) + " tolerances: " +
         std::to_string(congruences) + " congruences, " +
         std::to_string(representable) + " representable, " +
         std::to_string(weakly) + " weakly representable, " +
         std::to_string(nest) + " nest-representable");
    if (nest_only > 0) {
      note(std::to_string(nest_only) +
           " tolerance(s) are nest-representable but not weakly representable");
    }
    emit(to_json(save_catalog, catalog), classify_opts.out);
    return 0;
  }

  if (app.got_subcommand(eval_cmd)) {
    const FiniteAlgebra algebra = load_algebra_file(eval_opts.algebra);
    const Term term = parse_term(eval_term_source);
    const auto bindings = parse_bindings(eval_binds);
    for (const auto& [name, relation] : bindings) {
      if (relation.size() != algebra.size()) {
        raise(Errc::SizeMismatch, "binding '" + name +
                                      "' lives on the wrong universe for the "
                                      "algebra");
      }
    }
    const BinaryRelation result = eval_term(term, bindings);
    note("evaluated '" + render_term(term) + "' to " +
         std::to_string(result.pair_count()) + " pairs");
    emit(to_json(save_relation, result), eval_opts.out);
    return 0;
  }

  if (app.got_subcommand(check_cmd)) {
    const FiniteAlgebra algebra = load_algebra_file(check_opts.algebra);
    const Term premise = parse_term(check_p);
    const Term conclusion = parse_term(check_q);

    json modes = json::object();
    bool all_hold = true;
    const auto run_mode = [&](const std::string& mode,
                              const std::vector<BinaryRelation>& relations) {
      InclusionVerdict verdict;
      if (check_samples > 0) {
        verdict = sample_term_inclusion(algebra, premise, conclusion, relations,
                                        check_samples, check_seed);
      } else {
        verdict = check_term_inclusion(algebra, premise, conclusion,
                                       binding_scan_order(relations), caps);
      }
      all_hold = all_hold && verdict.holds;
      modes[mode] = to_json(save_inclusion_verdict, verdict);
      note(mode + ": " + (verdict.holds ? "holds" : "fails") +
           (verdict.exhaustive ? "" : " (sampled, non-exhaustive)"));
      if (verdict.counterexample) {
        std::string bound;
        for (const auto& [name, rel] : verdict.counterexample->bindings)
          bound += " " + name + "=" + json(rel.pairs()).dump();
        note("counterexample:" + bound + " pair=" +
             json(verdict.counterexample->tuple).dump());
      }
    };

    if (check_mode == "congruences" || check_mode == "both") {
      run_mode("congruences",
               enumerate_closed(algebra, ClosureMode::Congruence, caps));
    }
    if (check_mode == "nest" || check_mode == "both") {
      run_mode("nest", nest_representable_set(algebra, caps).nest_set());
    }
    emit(json{{"algebra", check_opts.algebra},
              {"premise", render_term(premise)},
              {"conclusion", render_term(conclusion)},
              {"modes", std::move(modes)}},
         check_opts.out);
    return all_hold ? 0 : 1;
  }

  if (app.got_subcommand(graph_cmd)) {
    if (graph_cmd->got_subcommand(graph_of_term_cmd)) {
      const LabeledGraph graph = graph_of_term(parse_term(graph_term_source));
      emit(to_json(save_graph, graph), graph_out);
      return 0;
    }
    if (graph_cmd->got_subcommand(graph_regular_cmd)) {
      if (regular_term_source.empty() == regular_graph_path.empty()) {
        raise(Errc::Io, "give exactly one of --term or --graph");
      }
      const bool regular =
          regular_term_source.empty()
              ? is_regular(load_graph_file(regular_graph_path))
              : is_regular_term(parse_term(regular_term_source));
      note(regular ? "regular" : "not regular");
      emit(json{{"regular", regular}}, "");
      return regular ? 0 : 1;
    }
    const LabeledGraph graph = load_graph_file(graph_eval_path);
    const auto bindings = parse_bindings(graph_eval_binds);
    const TupleRelation result = eval_graph(graph, bindings);
    json tuples = json::array();
    for (const auto& tuple : result.tuples()) tuples.push_back(tuple);
    note(std::to_string(result.tuples().size()) + " tuples of arity " +
         std::to_string(result.arity()));
    emit(json{{"size", result.size()},
              {"arity", result.arity()},
              {"tuples", std::move(tuples)}},
         graph_eval_out);
    return 0;
  }

  if (app.got_subcommand(maltsev_cmd)) {
    if (maltsev_cmd->got_subcommand(maltsev_gen_cmd)) {
      const auto graph_input = [&](const std::string& term_source,
                                   const std::string& graph_path, int factors,
                                   const char* side) {
        if (term_source.empty() == graph_path.empty()) {
          raise(Errc::Io, std::string("give exactly one of a ") + side +
                              " term or a " + side + " graph file");
        }
        if (!term_source.empty()) {
          Term term = parse_term(term_source);
          if (factors > 0) term = plus_substitute(term, factors);
          return graph_of_term(term);
        }
        return load_graph_file(graph_path);
      };
      const LabeledGraph premise =
          graph_input(gen_p, gen_premise_graph, gen_pn, "premise");
      const LabeledGraph conclusion =
          graph_input(gen_q, gen_conclusion_graph, gen_qn, "conclusion");
      const MaltsevCondition condition = generate_condition(premise, conclusion);
      note("condition with " + std::to_string(condition.symbols.size()) +
           " symbols and " + std::to_string(condition.identities.size()) +
           " identities, arity " + std::to_string(condition.arity));
      emit(to_json(save_condition, condition), gen_out);
      return 0;
    }
    if (maltsev_cmd->got_subcommand(maltsev_check_cmd)) {
      const FiniteAlgebra algebra =
          load_algebra_file(maltsev_check_opts.algebra);
      const MaltsevCondition condition =
          load_condition_file(maltsev_check_condition);
      const auto witnesses = load_witnesses_file(maltsev_check_witness);
      const WitnessReport report =
          check_witnesses(algebra, condition, witnesses);
      note(report.pass ? "all identities hold" : "an identity fails");
      emit(to_json(save_witness_report, report), maltsev_check_opts.out);
      return report.pass ? 0 : 1;
    }
    const FiniteAlgebra algebra = load_algebra_file(maltsev_search_opts.algebra);
    const MaltsevCondition condition =
        load_condition_file(maltsev_search_condition);
    SearchOptions options;
    options.mode = maltsev_search_mode == "clone"
                       ? SearchOptions::Mode::ExhaustiveClone
                       : SearchOptions::Mode::DepthBounded;
    options.depth = maltsev_search_depth;
    const SearchResult result =
        bounded_term_search(algebra, condition, options, caps);
    switch (result.status) {
      case SearchStatus::Found:
        note("witnesses found (" + std::to_string(result.table_count) +
             " tables generated)");
        break;
      case SearchStatus::NotFoundDefinitive:
        note("no witnesses exist: the full clone was searched");
        break;
      case SearchStatus::Inconclusive:
        note("no witnesses up to the depth bound; inconclusive");
        break;
    }
    emit(to_json(save_search_result, result), maltsev_search_opts.out);
    return result.status == SearchStatus::Found ? 0 : 1;
  }

  // theorem
  const FiniteAlgebra algebra = load_algebra_file(theorem_opts.algebra);
  TheoremOptions options;
  if (!theorem_witness.empty())
    options.witness = load_witnesses_file(theorem_witness);
  if (!theorem_search.empty()) {
    SearchOptions search;
    search.mode = theorem_search == "clone" ? SearchOptions::Mode::ExhaustiveClone
                                            : SearchOptions::Mode::DepthBounded;
    search.depth = theorem_depth;
    options.search = search;
  }
  if (theorem_qn > 0) options.conclusion_factors = theorem_qn;
  const TheoremReport report =
      theorem_report(algebra, theorem_opts.algebra, parse_term(theorem_p),
                     parse_term(theorem_q), options, caps);
  note("regularity: " + report.regularity_checked + " is regular");
  note("congruence inclusion: " +
       std::string(report.congruence.holds ? "holds" : "fails"));
  note("nest inclusion: " + std::string(report.nest.holds ? "holds" : "fails"));
  note("maltsev: " + std::string(maltsev_status_name(report.maltsev)) +
       " (source: " + report.maltsev_source + ")");
  emit(to_json(save_theorem_report, report), theorem_opts.out);
  return report.congruence.holds && report.nest.holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return error.code() == Errc::CapExceeded ? 3 : 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
}
