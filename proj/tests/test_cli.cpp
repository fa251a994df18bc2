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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "oracles.hpp"

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

std::string corpus(const std::string& name) {
  return tolkit::oracle::corpus_path(name);
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/tolkit_cli_test_") + name;
}

RunResult run_cli(const std::string& arguments) {
  const std::string out_file = temp_path("stdout.txt");
  const std::string command = std::string(TOLKIT_CLI) + " " + arguments +
                              " > " + out_file + " 2>/dev/null";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.stdout_text = buffer.str();
  return result;
}

json machine_output(const std::string& stdout_text) {
  // Machine output is the JSON document after the '#' summary lines.
  std::istringstream in(stdout_text);
  std::string line, rest;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    rest += line + "\n";
  }
  return json::parse(rest);
}

}  // namespace

TEST_CASE("validate: exit codes 0 and 2") {
  CHECK(run_cli("validate " + corpus("z4.json")).exit_code == 0);
  CHECK(run_cli("validate /nonexistent.json").exit_code == 2);

  const std::string bad = temp_path("bad_algebra.json");
  std::ofstream(bad) << R"({"size": 4, "operations":
      [{"name": "f", "arity": 2, "table": [4]}]})";
  CHECK(run_cli("validate " + bad).exit_code == 2);
}

TEST_CASE("check: holds and fails map to 0 and 1") {
  CHECK(run_cli("check " + corpus("z4.json") +
                " -p \"a;b\" -q \"b;a\" --mode both")
            .exit_code == 0);

  const RunResult failing = run_cli("check " + corpus("set3.json") +
                                    " -p \"a;b\" -q \"b;a\" --mode congruences");
  CHECK(failing.exit_code == 1);
  const json doc = machine_output(failing.stdout_text);
  const json& cx = doc["modes"]["congruences"]["counterexample"];
  CHECK(cx["tuple"] == json::array({0, 2}));
  CHECK(cx["bindings"]["a"] ==
        json::parse("[[0,0],[0,1],[1,0],[1,1],[2,2]]"));
  CHECK(cx["bindings"]["b"] ==
        json::parse("[[0,0],[1,1],[1,2],[2,1],[2,2]]"));
}

TEST_CASE("check: parse errors exit 2") {
  CHECK(run_cli("check " + corpus("z4.json") + " -p \"a;;b\" -q \"b;a\"")
            .exit_code == 2);
  CHECK(run_cli("check " + corpus("z4.json") + " --unknown-flag x")
            .exit_code == 2);
}

TEST_CASE("caps map to exit 3") {
  CHECK(run_cli("--max-size 2 classify " + corpus("set3.json")).exit_code == 3);
  CHECK(run_cli("--max-evals 2 check " + corpus("set3.json") +
                " -p \"a;b\" -q \"b;a\" --mode congruences")
            .exit_code == 3);
}

TEST_CASE("caps honor the environment variables") {
  const std::string out_file = temp_path("env_stdout.txt");
  const std::string command = std::string("TOLKIT_MAX_SIZE=2 ") + TOLKIT_CLI +
                              " classify " + corpus("set3.json") + " > " +
                              out_file + " 2>/dev/null";
  CHECK(WEXITSTATUS(std::system(command.c_str())) == 3);
}

TEST_CASE("sampled checks are flagged non-exhaustive") {
  const RunResult sampled =
      run_cli("check " + corpus("set3.json") +
              " -p \"a;b\" -q \"b;a\" --mode congruences --sample 200");
  CHECK(sampled.exit_code == 1);
  const json doc = machine_output(sampled.stdout_text);
  CHECK(doc["modes"]["congruences"]["exhaustive"] == false);
}

TEST_CASE("eval pipes relations through files") {
  const std::string rel_file = temp_path("theta01.json");
  std::ofstream(rel_file)
      << R"({"size": 3, "pairs": [[0,0],[0,1],[1,0],[1,1],[2,2]]})";
  const RunResult result =
      run_cli("eval " + corpus("set3.json") + " --term \"a;a\" --bind a=" +
              rel_file);
  CHECK(result.exit_code == 0);
  const json doc = machine_output(result.stdout_text);
  CHECK(doc["size"] == 3);
  CHECK(doc["pairs"] == json::parse("[[0,0],[0,1],[1,0],[1,1],[2,2]]"));
}

TEST_CASE("graph subcommands") {
  const RunResult of_term = run_cli("graph of-term --term \"a;b\"");
  CHECK(of_term.exit_code == 0);
  const json graph = machine_output(of_term.stdout_text);
  CHECK(graph["vertices"] == 3);
  CHECK(graph["distinguished"] == json::array({0, 2}));

  CHECK(run_cli("graph regular --term \"a;b;a\"").exit_code == 0);
  CHECK(run_cli("graph regular --term \"a;a\"").exit_code == 1);
  CHECK(run_cli("graph regular --term \"a+b\"").exit_code == 2);

  const std::string graph_file = temp_path("path.json");
  std::ofstream(graph_file) << graph.dump();
  const std::string rel_file = temp_path("full3.json");
  std::ofstream(rel_file)
      << R"({"size": 3, "pairs": [[0,0],[0,1],[0,2],[1,0],[1,1],[1,2],[2,0],[2,1],[2,2]]})";
  const RunResult eval = run_cli("graph eval --graph " + graph_file +
                                 " --bind a=" + rel_file + " --bind b=" +
                                 rel_file);
  CHECK(eval.exit_code == 0);
  CHECK(machine_output(eval.stdout_text)["tuples"].size() == 9);
}

TEST_CASE("maltsev pipeline: gen, check, search") {
  const std::string condition_file = temp_path("condition.json");
  CHECK(run_cli("maltsev gen -p \"a;b\" -q \"b;a\" --out " + condition_file)
            .exit_code == 0);

  const std::string witness_file = temp_path("witness.json");
  std::ofstream(witness_file) << R"({
    "t0": {"var": 0},
    "t1": {"op": "add", "args": [
      {"op": "add", "args": [{"var": 0}, {"op": "neg", "args": [{"var": 1}]}]},
      {"var": 2}]},
    "t2": {"var": 2}})";
  CHECK(run_cli("maltsev check " + corpus("z4.json") + " --condition " +
                condition_file + " --witness " + witness_file)
            .exit_code == 0);

  // A wrong witness fails with exit 1.
  const std::string wrong_file = temp_path("wrong_witness.json");
  std::ofstream(wrong_file) << R"({
    "t0": {"var": 0}, "t1": {"var": 0}, "t2": {"var": 2}})";
  CHECK(run_cli("maltsev check " + corpus("z4.json") + " --condition " +
                condition_file + " --witness " + wrong_file)
            .exit_code == 1);

  CHECK(run_cli("maltsev search " + corpus("z2.json") + " --condition " +
                condition_file + " --mode clone")
            .exit_code == 0);
  const RunResult absent = run_cli("maltsev search " + corpus("chain2.json") +
                                   " --condition " + condition_file +
                                   " --mode clone");
  CHECK(absent.exit_code == 1);
  CHECK(machine_output(absent.stdout_text)["status"] == "not-found-definitive");
}

TEST_CASE("theorem: exit codes follow the verdicts") {
  CHECK(run_cli("theorem " + corpus("z4.json") +
                " -p \"a;b\" -q \"b;a\" --search depth --depth 2")
            .exit_code == 0);
  CHECK(run_cli("theorem " + corpus("set3.json") + " -p \"a;b\" -q \"b;a\"")
            .exit_code == 1);
  CHECK(run_cli("theorem " + corpus("z4.json") + " -p \"a;a\" -q \"a\"")
            .exit_code == 2);
}

TEST_CASE("identical invocations produce byte-identical outputs") {
  const std::string out1 = temp_path("catalog1.json");
  const std::string out2 = temp_path("catalog2.json");
  CHECK(run_cli("classify " + corpus("chain3.json") + " --out " + out1)
            .exit_code == 0);
  CHECK(run_cli("classify " + corpus("chain3.json") + " --out " + out2)
            .exit_code == 0);
  std::stringstream first, second;
  first << std::ifstream(out1).rdbuf();
  second << std::ifstream(out2).rdbuf();
  CHECK(first.str() == second.str());
  CHECK_FALSE(first.str().empty());
}
