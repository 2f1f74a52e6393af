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

#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "d2cs/enum_all.hpp"
#include "d2cs/formulas.hpp"
#include "d2cs/generators.hpp"
#include "d2cs/io.hpp"
#include "d2cs/oracle.hpp"
#include "d2cs/reconcile.hpp"
#include "d2cs/schordal.hpp"

// Subcommand bodies for the d2cs tool. Each writes its result to `out`,
// diagnostics to `err`, and returns the process exit code.

namespace d2cs::cli {

enum ExitCode : int {
  kOk = 0,
  /// A well-formed negative answer: seo violation, no ordering, strict mismatch.
  kNegative = 1,
  kInputError = 2,
};

inline std::vector<Vertex> parse_order(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad vertex '" + tok + "' in --order");
    }
  }
  return out;
}

/// Writes the generated graph to `path`, or to `out` when path is empty.
inline int cmd_gen(const FamilySpec& spec, const std::string& path, std::ostream& out) {
  const Graph g = make_graph(spec);
  if (path.empty()) {
    write_edge_list(out, g);
  } else {
    write_edge_list_file(path, g);
  }
  return kOk;
}

/// Decimal value on the first line, then one JSON record.
inline int cmd_count_formula(const std::string& family, const std::vector<long long>& params, std::ostream& out,
                             std::ostream& err) {
  Json rec;
  rec["schema"] = std::string(kSchemaTag);
  rec["family"] = family;
  rec["params"] = params;
  if (family == "kary-bounds") {
    if (params.size() != 2) throw InputError("kary-bounds takes k,h");
    const auto b = formulas::kary_bounds(static_cast<int>(params[0]), static_cast<int>(params[1]));
    out << b.lower << ' ' << b.upper << ' ' << b.fmax << '\n';
    rec["lower"] = b.lower.str();
    rec["upper"] = b.upper.str();
    rec["fmax"] = b.fmax.str();
    rec["disputed"] = false;
    out << rec.dump() << '\n';
    return kOk;
  }
  const FamilySpec spec{parse_family(family), params, 0.0, std::nullopt};
  const auto f = formula_for(spec);
  if (!f) throw InputError("family '" + family + "' has no closed-form count");
  if (spec.family == Family::kSplit && params.size() == 2 && params[1] == 1) {
    err << "warning: r=1 is outside the split-graph formula's stated hypothesis r > 1\n";
  }
  rec["family"] = std::string(family_name(spec.family));
  rec["formula"] = f->expression;
  rec["value"] = f->value.str();
  rec["disputed"] = f->disputed;
  out << f->value << '\n' << rec.dump() << '\n';
  return kOk;
}

/// Total on the first line. With emit_sets, a "# size0= size1= size2="
/// comment follows, then every D2CS of size >= 3, one per line.
inline int cmd_enum_all(const Graph& g, bool emit_sets, std::ostream& out) {
  if (!emit_sets) {
    out << enum_all_d2cs(g) << '\n';
    return kOk;
  }
  std::ostringstream body;
  const BigCount total = enum_all_d2cs(g, [&](const VertexSet& s) { body << s.str() << '\n'; });
  out << total << '\n'
      << "# size0=1 size1=" << g.order() << " size2=" << g.size() << '\n'
      << body.str();
  return kOk;
}

enum class OracleMode { kCount, kMaximal, kMaximum };

inline int cmd_oracle(const Graph& g, OracleMode mode, bool emit_sets, const OracleOptions& opt, std::ostream& out) {
  switch (mode) {
    case OracleMode::kCount: {
      const OracleResult r = oracle_count(g, emit_sets, opt);
      out << r.total << '\n' << "# by_size";
      for (const auto& c : r.by_size) out << ' ' << c;
      out << '\n';
      if (r.sets) {
        for (const auto& s : *r.sets) out << s.str() << '\n';
      }
      return kOk;
    }
    case OracleMode::kMaximal:
      for (const auto& s : oracle_maximal(g, opt)) out << s.str() << '\n';
      return kOk;
    case OracleMode::kMaximum:
      out << oracle_maximum(g, opt).str() << '\n';
      return kOk;
  }
  return kOk;
}

/// Reference mode prints the maximal family only. Paper mode first prints
/// "# seo v_1 ... v_n" (the relabeling), the raw print count and any NIL
/// notes as comments, then the deduplicated family in canonical order.
inline int cmd_maximal_schordal(const Graph& g, const std::string& mode, const std::string& order,
                                std::ostream& out, std::ostream& err) {
  if (mode == "reference") {
    if (!find_seo(g)) {
      err << "graph is not strongly chordal\n";
      return kNegative;
    }
    for (const auto& s : maximal_d2cs_reference(g)) out << s.str() << '\n';
    return kOk;
  }
  if (mode != "paper") throw InputError("--mode must be 'paper' or 'reference'");
  std::optional<EliminationOrdering> ord;
  if (!order.empty()) {
    ord = EliminationOrdering(parse_order(order));
  } else {
    ord = find_seo(g);
    if (!ord) {
      err << "graph is not strongly chordal\n";
      return kNegative;
    }
  }
  PaperMaximalRun run = maximal_d2cs_paper(g, *ord);
  out << "# seo";
  for (Vertex v : ord->order()) out << ' ' << v;
  out << "\n# printed " << run.printed.size() << '\n';
  for (const auto& note : run.notes) out << "# note " << note << '\n';
  canonicalize(run.printed);
  for (const auto& s : run.printed) out << s.str() << '\n';
  return kOk;
}

inline int cmd_seo_check(const Graph& g, const std::string& order, std::ostream& out) {
  const EliminationOrdering ord(parse_order(order));
  if (const auto bad = verify_seo(g, ord)) {
    out << bad->describe() << '\n';
    return kNegative;
  }
  out << "OK\n";
  return kOk;
}

inline int cmd_seo_find(const Graph& g, std::ostream& out) {
  const auto ord = find_seo(g);
  if (!ord) {
    out << "NONE\n";
    return kNegative;
  }
  for (std::size_t i = 0; i < ord->order().size(); ++i) out << (i ? " " : "") << ord->order()[i];
  out << '\n';
  return kOk;
}

/// Mismatches are findings: exit 0 unless `strict`.
inline int cmd_reconcile(const std::vector<FamilySpec>& plan, const ReconcileOptions& opt, bool strict,
                         const std::string& path, std::ostream& out, std::ostream& err) {
  const ReconcileReport report = run_reconcile(plan, opt);
  const Json j = to_json(report);
  if (const auto problems = validate_report(j); !problems.empty()) {
    for (const auto& p : problems) err << "report invalid: " << p << '\n';
    throw InternalError("generated report failed validation");
  }
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << j.dump(2) << '\n';
  }
  const auto& s = j["summary"];
  err << "entries: " << s["entries"]["match"] << " match, " << s["entries"]["mismatch"] << " mismatch, "
      << s["entries"]["skipped"] << " skipped; schordal audits: " << s["schordal"]["match"] << " match, "
      << s["schordal"]["mismatch"] << " mismatch, " << s["schordal"]["skipped"] << " skipped\n";
  const bool mismatched = s["entries"]["mismatch"].get<int>() > 0 || s["schordal"]["mismatch"].get<int>() > 0;
  return strict && mismatched ? kNegative : kOk;
}

}  // namespace d2cs::cli
