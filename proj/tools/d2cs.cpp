/*
 * Copyright 2026 The d2cs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "d2cs/commands.hpp"

namespace {

d2cs::Graph load(const std::string& path) {
  if (path == "-") return d2cs::read_edge_list(std::cin);
  return d2cs::read_edge_list_file(path);
}

d2cs::FamilySpec single_spec(const std::string& family, const std::string& params, std::optional<std::uint64_t> seed) {
  auto specs = d2cs::expand_params(d2cs::parse_family(family), params, seed);
  if (specs.size() != 1) throw d2cs::InputError("gen takes exact parameters, not ranges");
  return specs.front();
}

std::vector<long long> int_params(const std::string& params) {
  std::vector<long long> out;
  std::stringstream ss(params);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw d2cs::InputError("");
    } catch (const std::exception&) {
      throw d2cs::InputError("bad integer parameter '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count and enumerate distance-2 clique sets (D2CS) of graphs"};
  app.require_subcommand(1);

  std::string family;
  std::string params;
  std::string out_path;
  std::string input;
  std::string mode;
  std::string order;
  std::optional<std::uint64_t> seed;
  int limit = -1;
  unsigned threads = 0;
  bool emit_sets = false;
  bool strict = false;
  std::vector<std::string> families;
  std::vector<std::string> param_list;

  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("--family", family, "Graph family")->required();
  gen->add_option("--params", params, "Comma-separated parameters")->required();
  gen->add_option("--seed", seed, "Seed for the random family");
  gen->add_option("--out", out_path, "Output file (default: stdout)");

  auto* count = app.add_subcommand("count-formula", "Evaluate a closed-form D2CS count");
  count->add_option("--family", family, "Family, or kary-bounds")->required();
  count->add_option("--params", params, "Comma-separated integers")->required();

  auto* enum_all = app.add_subcommand("enum-all", "Count all D2CS by filtering cliques of the square");
  enum_all->add_option("input", input, "Edge-list file, - for stdin")->required();
  enum_all->add_flag("--emit-sets", emit_sets, "List every D2CS of size >= 3");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive subset search");
  oracle->add_option("input", input, "Edge-list file, - for stdin")->required();
  oracle->add_option("--limit", limit, "Vertex cap (default 24 or D2CS_ORACLE_LIMIT)");
  oracle->add_option("--mode", mode, "count, maximal or maximum")->check(CLI::IsMember({"count", "maximal", "maximum"}));
  oracle->add_option("--threads", threads, "Worker threads (0 = all cores)");
  oracle->add_flag("--emit-sets", emit_sets, "List every D2CS (count mode)");

  auto* maximal = app.add_subcommand("maximal-schordal", "Maximal D2CS of a strongly chordal graph");
  maximal->add_option("input", input, "Edge-list file, - for stdin")->required();
  maximal->add_option("--mode", mode, "paper or reference")->check(CLI::IsMember({"paper", "reference"}));
  maximal->add_option("--order", order, "Strong elimination ordering to use (paper mode)");

  auto* seo_check = app.add_subcommand("seo-check", "Verify a strong elimination ordering");
  seo_check->add_option("input", input, "Edge-list file, - for stdin")->required();
  seo_check->add_option("--order", order, "Comma-separated vertex order")->required();

  auto* seo_find = app.add_subcommand("seo-find", "Find a strong elimination ordering");
  seo_find->add_option("input", input, "Edge-list file, - for stdin")->required();

  auto* reconcile = app.add_subcommand("reconcile", "Check closed forms and enumerators against the oracle");
  reconcile->add_option("--family", families, "Family (repeatable; pairs with --params)");
  reconcile->add_option("--params", param_list, "Parameter ranges such as 2..8 or 2..3,1..2");
  reconcile->add_option("--seed", seed, "Seed for random instances");
  reconcile->add_option("--limit", limit, "Oracle vertex cap");
  reconcile->add_option("--threads", threads, "Oracle worker threads (0 = all cores)");
  reconcile->add_option("--out", out_path, "Report file (default: stdout)");
  reconcile->add_flag("--strict", strict, "Exit 1 on any MISMATCH");

  CLI11_PARSE(app, argc, argv);

  namespace cli = d2cs::cli;
  try {
    d2cs::OracleOptions oracle_opt;
    if (limit >= 0) oracle_opt.limit = limit;
    oracle_opt.threads = threads;

    if (gen->parsed()) return cli::cmd_gen(single_spec(family, params, seed), out_path, std::cout);
    if (count->parsed()) return cli::cmd_count_formula(family, int_params(params), std::cout, std::cerr);
    if (enum_all->parsed()) return cli::cmd_enum_all(load(input), emit_sets, std::cout);
    if (oracle->parsed()) {
      const auto m = mode == "maximal"   ? cli::OracleMode::kMaximal
                     : mode == "maximum" ? cli::OracleMode::kMaximum
                                         : cli::OracleMode::kCount;
      return cli::cmd_oracle(load(input), m, emit_sets, oracle_opt, std::cout);
    }
    if (maximal->parsed()) {
      return cli::cmd_maximal_schordal(load(input), mode.empty() ? "reference" : mode, order, std::cout, std::cerr);
    }
    if (seo_check->parsed()) return cli::cmd_seo_check(load(input), order, std::cout);
    if (seo_find->parsed()) return cli::cmd_seo_find(load(input), std::cout);
    if (reconcile->parsed()) {
      if (families.size() != param_list.size()) {
        throw d2cs::InputError("each --family needs a matching --params");
      }
      std::vector<d2cs::FamilySpec> plan;
      if (families.empty()) {
        plan = d2cs::default_reconcile_plan();
      } else {
        for (std::size_t i = 0; i < families.size(); ++i) {
          for (auto& s : d2cs::expand_params(d2cs::parse_family(families[i]), param_list[i], seed)) {
            plan.push_back(std::move(s));
          }
        }
      }
      d2cs::ReconcileOptions opt;
      opt.oracle = oracle_opt;
      return cli::cmd_reconcile(plan, opt, strict, out_path, std::cout, std::cerr);
    }
  } catch (const d2cs::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return cli::kOk;
}
