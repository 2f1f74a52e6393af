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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "d2cs/big_count.hpp"
#include "d2cs/error.hpp"
#include "d2cs/enum_all.hpp"
#include "d2cs/formulas.hpp"
#include "d2cs/generators.hpp"
#include "d2cs/graph.hpp"
#include "d2cs/oracle.hpp"
#include "d2cs/schordal.hpp"

namespace d2cs {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaTag = "d2cs/1";

struct FormulaValue {
  std::string expression;
  BigCount value;
  bool disputed = false;
};

/// The closed-form count for a family instance, or nothing for families
/// without one. Singular parameters throw InputError.
inline std::optional<FormulaValue> formula_for(const FamilySpec& spec) {
  namespace f = formulas;
  const auto& p = spec.params;
  if (p.size() != family_arity(spec.family)) {
    throw InputError(std::string(family_name(spec.family)) + " takes " +
                     std::to_string(family_arity(spec.family)) + " integer parameter(s)");
  }
  auto at = [&](std::size_t i) {
    if (p[i] < -1'000'000 || p[i] > 1'000'000) throw InputError("parameter out of range");
    return static_cast<int>(p[i]);
  };
  switch (spec.family) {
    case Family::kStar:
      return FormulaValue{"2^n+n+1", f::count_star(at(0))};
    case Family::kComplete:
      return FormulaValue{"2^n", f::count_complete(at(0))};
    case Family::kEmpty:
      return FormulaValue{"n+1", f::count_empty(at(0))};
    case Family::kLadder:
      return FormulaValue{"10n-6", f::count_ladder(at(0))};
    case Family::kKTree:
      return FormulaValue{"2^n(1-2^-(k+1))+n-k", f::count_ktree(at(0), at(1)), f::kKTreeDisputed};
    case Family::kKaryTree:
      return FormulaValue{"k/(k-1)(f(k+1,1)-4)(k^(h-1)-1)+f(k,1)", f::count_kary(at(0), at(1))};
    case Family::kFibonacciTree:
      return FormulaValue{"3*2^(n-2)-L_n+2", f::count_fib_tree(at(0))};
    case Family::kBinaryFibonacciTree:
      return FormulaValue{"2F_n+3F_(n+2)-9", f::count_binary_fib_tree(at(0))};
    case Family::kBinomialTree:
      return FormulaValue{"k2^k+2", f::count_binomial_tree(at(0))};
    case Family::kSplit:
      return FormulaValue{"k2^(k-1)(2^r-1)+2^k+kr", f::count_split(at(0), at(1))};
    case Family::kPath:
    case Family::kCycle:
    case Family::kRandomConnected:
    case Family::kTree:
      return std::nullopt;
  }
  return std::nullopt;
}

/// Expands "a..b,c" style parameter ranges into concrete specs (cartesian
/// product, first parameter slowest). For `random` the last component is the
/// edge probability. For `tree`, a single size range expands to every
/// catalog tree of each size.
inline std::vector<FamilySpec> expand_params(Family family, std::string_view ranges,
                                             std::optional<std::uint64_t> seed = std::nullopt) {
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char c : ranges) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    parts.push_back(cur);
  }
  double probability = 0.0;
  if (family == Family::kRandomConnected) {
    if (parts.size() != 2) throw InputError("random takes --params n,p");
    try {
      std::size_t used = 0;
      probability = std::stod(parts.back(), &used);
      if (used != parts.back().size()) throw InputError("bad probability");
    } catch (const std::exception&) {
      throw InputError("bad edge probability '" + parts.back() + "'");
    }
    parts.pop_back();
  }
  std::vector<std::vector<long long>> axes;
  for (const auto& part : parts) {
    auto parse = [&](const std::string& s) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(s, &used);
      } catch (const std::exception&) {
        throw InputError("bad parameter '" + part + "'");
      }
      if (used != s.size()) throw InputError("bad parameter '" + part + "'");
      return v;
    };
    std::vector<long long> axis;
    if (auto dots = part.find(".."); dots != std::string::npos) {
      const long long lo = parse(part.substr(0, dots));
      const long long hi = parse(part.substr(dots + 2));
      if (hi < lo || hi - lo > 10'000) throw InputError("bad range '" + part + "'");
      for (long long v = lo; v <= hi; ++v) axis.push_back(v);
    } else {
      axis.push_back(parse(part));
    }
    axes.push_back(std::move(axis));
  }
  if (family == Family::kTree && axes.size() == 1) {
    std::vector<FamilySpec> out;
    for (long long n : axes[0]) {
      if (n < 1 || n > 16) throw InputError("tree sizes must lie in 1..16");
      const auto count = static_cast<long long>(tree_catalog(static_cast<int>(n)).size());
      for (long long i = 0; i < count; ++i) out.push_back({family, {n, i}, 0.0, std::nullopt});
    }
    return out;
  }
  if (axes.size() != family_arity(family)) {
    throw InputError(std::string(family_name(family)) + " takes " + std::to_string(family_arity(family)) +
                     " integer parameter(s), got " + std::to_string(axes.size()));
  }
  std::vector<FamilySpec> out{{family, {}, probability, seed}};
  for (const auto& axis : axes) {
    std::vector<FamilySpec> next;
    for (const auto& base : out) {
      for (long long v : axis) {
        FamilySpec s = base;
        s.params.push_back(v);
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  return out;
}

enum class Verdict { kMatch, kMismatch, kSkipped };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kMatch:
      return "MATCH";
    case Verdict::kMismatch:
      return "MISMATCH";
    case Verdict::kSkipped:
      return "SKIPPED";
  }
  return "?";
}

struct ReconcileEntry {
  FamilySpec spec;
  int n = 0;
  int m = 0;
  std::string formula;
  std::optional<BigCount> formula_value;
  std::optional<BigCount> oracle_value;
  bool disputed = false;
  Verdict verdict = Verdict::kSkipped;
  std::string reason;
  std::string notes;
};

/// The published maximal enumerator vs the closed-neighborhood reference
/// (and the oracle when within its limit) on one strongly chordal instance.
struct SchordalAudit {
  FamilySpec spec;
  int n = 0;
  std::optional<EliminationOrdering> seo;
  std::size_t printed = 0;
  std::vector<VertexSet> paper;
  std::vector<VertexSet> reference;
  std::optional<std::vector<VertexSet>> oracle;
  /// In the reference family but never printed.
  std::vector<VertexSet> missing;
  /// Printed but not in the reference family.
  std::vector<VertexSet> extra;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::kSkipped;
  std::string reason;
};

struct ReconcileReport {
  std::vector<ReconcileEntry> entries;
  std::vector<SchordalAudit> schordal;
};

struct ReconcileOptions {
  OracleOptions oracle;
  /// Audit strongly chordal instances with the maximal-set enumerators.
  bool audit_schordal = true;
};

namespace detail {

/// Looks for an index shift that reconciles a recurrence-family formula
/// with the observed count, e.g. "oracle equals formula at n+1".
inline std::string offset_note(const FamilySpec& spec, const BigCount& oracle) {
  if (spec.family != Family::kFibonacciTree && spec.family != Family::kBinaryFibonacciTree) return {};
  for (int shift : {-2, -1, 1, 2}) {
    FamilySpec moved = spec;
    moved.params[0] += shift;
    try {
      if (auto f = formula_for(moved); f && f->value == oracle) {
        return "oracle equals the formula at n" + std::string(shift > 0 ? "+" : "") + std::to_string(shift);
      }
    } catch (const InputError&) {
    }
  }
  return {};
}

inline std::vector<VertexSet> family_difference(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
  std::vector<VertexSet> out;
  for (const auto& s : a) {
    if (std::find(b.begin(), b.end(), s) == b.end()) out.push_back(s);
  }
  canonicalize(out);
  return out;
}

inline ReconcileEntry reconcile_one(const FamilySpec& spec, const Graph& g, const ReconcileOptions& opt) {
  ReconcileEntry e;
  e.spec = spec;
  e.n = g.order();
  e.m = g.size();
  std::vector<std::string> skip;
  try {
    if (auto f = formula_for(spec)) {
      e.formula = f->expression;
      e.formula_value = f->value;
      e.disputed = f->disputed;
    } else {
      skip.push_back("no closed form for this family");
    }
  } catch (const InputError& err) {
    skip.push_back(std::string("formula undefined: ") + err.what());
  }
  try {
    e.oracle_value = oracle_count(g, false, opt.oracle).total;
  } catch (const OracleLimitError& err) {
    skip.push_back(err.what());
    // Too large for the oracle: record the enumerator's count as a note only.
    if (is_connected(g) && g.order() > 0) {
      const BigCount counted = enum_all_d2cs(g);
      e.notes = "enum-all count " + counted.str();
      if (e.formula_value) {
        if (*e.formula_value == counted) {
          e.notes += ", equal to the formula";
        } else if (auto shift = offset_note(spec, counted); !shift.empty()) {
          e.notes += ", equal to the " + shift.substr(shift.find("formula"));
        }
      }
    }
  }
  if (skip.empty()) {
    e.verdict = *e.formula_value == *e.oracle_value ? Verdict::kMatch : Verdict::kMismatch;
    if (e.verdict == Verdict::kMismatch) e.notes = offset_note(spec, *e.oracle_value);
    if (e.disputed) e.notes += (e.notes.empty() ? "" : "; ") + std::string("formula is independent of k-tree shape");
  } else {
    e.verdict = Verdict::kSkipped;
    for (const auto& s : skip) e.reason += (e.reason.empty() ? "" : "; ") + s;
  }
  return e;
}

inline std::optional<SchordalAudit> audit_one(const FamilySpec& spec, const Graph& g, const ReconcileOptions& opt) {
  if (!is_connected(g) || g.order() == 0) return std::nullopt;
  auto seo = find_seo(g);
  if (!seo) return std::nullopt;
  SchordalAudit a;
  a.spec = spec;
  a.n = g.order();
  a.seo = seo;
  a.reference = maximal_d2cs_reference(g);
  try {
    a.oracle = oracle_maximal(g, opt.oracle);
  } catch (const OracleLimitError&) {
  }
  if (g.neighbors(seo->vertex_at(1)).empty()) {
    a.verdict = Verdict::kSkipped;
    a.reason = "first vertex of the ordering has no neighbors (single-vertex graph)";
    return a;
  }
  PaperMaximalRun run = maximal_d2cs_paper(g, *seo);
  a.printed = run.printed.size();
  a.notes = std::move(run.notes);
  a.paper = std::move(run.printed);
  canonicalize(a.paper);
  a.missing = family_difference(a.reference, a.paper);
  a.extra = family_difference(a.paper, a.reference);
  a.verdict = a.missing.empty() && a.extra.empty() ? Verdict::kMatch : Verdict::kMismatch;
  return a;
}

inline Json params_json(const FamilySpec& spec) {
  Json p = Json::array();
  for (long long v : spec.params) p.push_back(v);
  if (spec.family == Family::kRandomConnected) p.push_back(spec.probability);
  return p;
}

inline Json family_json(Json& obj, const FamilySpec& spec) {
  obj["family"] = std::string(family_name(spec.family));
  obj["params"] = params_json(spec);
  obj["seed"] = spec.seed ? Json(*spec.seed) : Json(nullptr);
  return obj;
}

inline Json sets_json(const std::vector<VertexSet>& family) {
  Json arr = Json::array();
  for (const auto& s : family) arr.push_back(s.to_vector());
  return arr;
}

inline Json count_json(const std::optional<BigCount>& c) { return c ? Json(c->str()) : Json(nullptr); }

}  // namespace detail

/// Runs every requested instance; entries keep request order. Instances
/// over the oracle limit or with an undefined formula become SKIPPED rather
/// than aborting the run.
inline ReconcileReport run_reconcile(const std::vector<FamilySpec>& plan, const ReconcileOptions& opt = {}) {
  ReconcileReport report;
  for (const auto& spec : plan) {
    const Graph g = make_graph(spec);
    report.entries.push_back(detail::reconcile_one(spec, g, opt));
    if (opt.audit_schordal) {
      if (auto a = detail::audit_one(spec, g, opt)) report.schordal.push_back(std::move(*a));
    }
  }
  return report;
}

inline Json to_json(const ReconcileReport& report) {
  Json root;
  root["schema"] = std::string(kSchemaTag);
  root["kind"] = "reconcile";
  Json entries = Json::array();
  std::size_t tally[3] = {0, 0, 0};
  for (const auto& e : report.entries) {
    Json j;
    detail::family_json(j, e.spec);
    j["n"] = e.n;
    j["m"] = e.m;
    j["formula"] = e.formula.empty() ? Json(nullptr) : Json(e.formula);
    j["formula_value"] = detail::count_json(e.formula_value);
    j["oracle_value"] = detail::count_json(e.oracle_value);
    j["disputed"] = e.disputed;
    j["verdict"] = std::string(verdict_name(e.verdict));
    j["reason"] = e.reason.empty() ? Json(nullptr) : Json(e.reason);
    j["notes"] = e.notes;
    ++tally[static_cast<int>(e.verdict)];
    entries.push_back(std::move(j));
  }
  root["entries"] = std::move(entries);
  Json audits = Json::array();
  std::size_t atally[3] = {0, 0, 0};
  for (const auto& a : report.schordal) {
    Json j;
    detail::family_json(j, a.spec);
    j["n"] = a.n;
    j["seo"] = a.seo ? Json(a.seo->order()) : Json(nullptr);
    j["printed"] = a.printed;
    j["paper"] = detail::sets_json(a.paper);
    j["reference"] = detail::sets_json(a.reference);
    j["oracle"] = a.oracle ? detail::sets_json(*a.oracle) : Json(nullptr);
    j["reference_matches_oracle"] = a.oracle ? Json(*a.oracle == a.reference) : Json(nullptr);
    j["verdict"] = std::string(verdict_name(a.verdict));
    j["reason"] = a.reason.empty() ? Json(nullptr) : Json(a.reason);
    j["missing"] = detail::sets_json(a.missing);
    j["extra"] = detail::sets_json(a.extra);
    j["notes"] = a.notes;
    ++atally[static_cast<int>(a.verdict)];
    audits.push_back(std::move(j));
  }
  root["schordal"] = std::move(audits);
  root["summary"] = {
      {"entries", {{"match", tally[0]}, {"mismatch", tally[1]}, {"skipped", tally[2]}}},
      {"schordal", {{"match", atally[0]}, {"mismatch", atally[1]}, {"skipped", atally[2]}}},
  };
  return root;
}

/// Structural check of a report against the d2cs/1 layout; returns the
/// problems found (empty when valid). Mirrors schema/reconcile-report.schema.json
/// and adds the cross-field rules a JSON Schema cannot express.
inline std::vector<std::string> validate_report(const Json& root) {
  std::vector<std::string> errs;
  auto need = [&](const Json& obj, const char* key, auto pred, const std::string& where) {
    if (!obj.contains(key) || !pred(obj[key])) errs.push_back(where + ": bad or missing '" + key + "'");
  };
  auto is_str = [](const Json& j) { return j.is_string(); };
  auto is_int = [](const Json& j) { return j.is_number_integer(); };
  auto is_count = [](const Json& j) {
    return j.is_null() || (j.is_string() && !j.get<std::string>().empty() &&
                           j.get<std::string>().find_first_not_of("0123456789") == std::string::npos);
  };
  auto is_verdict = [](const Json& j) {
    return j.is_string() && (j == "MATCH" || j == "MISMATCH" || j == "SKIPPED");
  };
  auto is_sets = [](const Json& j) {
    if (!j.is_array()) return false;
    return std::all_of(j.begin(), j.end(), [](const Json& s) {
      return s.is_array() && std::all_of(s.begin(), s.end(), [](const Json& v) { return v.is_number_integer(); });
    });
  };
  if (!root.is_object()) return {"report is not an object"};
  if (root.value("schema", "") != kSchemaTag) errs.push_back("schema tag is not d2cs/1");
  if (!root.contains("entries") || !root["entries"].is_array()) return errs.push_back("entries missing"), errs;
  std::size_t idx = 0;
  for (const auto& e : root["entries"]) {
    const std::string where = "entries[" + std::to_string(idx++) + "]";
    need(e, "family", is_str, where);
    need(e, "params", [](const Json& j) { return j.is_array(); }, where);
    need(e, "n", is_int, where);
    need(e, "m", is_int, where);
    need(e, "formula_value", is_count, where);
    need(e, "oracle_value", is_count, where);
    need(e, "disputed", [](const Json& j) { return j.is_boolean(); }, where);
    need(e, "verdict", is_verdict, where);
    if (!e.contains("verdict") || !e.contains("formula_value") || !e.contains("oracle_value")) continue;
    const auto& fv = e["formula_value"];
    const auto& ov = e["oracle_value"];
    if (e["verdict"] == "SKIPPED") {
      if (!e.contains("reason") || !e["reason"].is_string()) errs.push_back(where + ": SKIPPED without reason");
    } else if (fv.is_null() || ov.is_null()) {
      errs.push_back(where + ": verdict without both values");
    } else if ((fv == ov) != (e["verdict"] == "MATCH")) {
      errs.push_back(where + ": verdict disagrees with values");
    }
  }
  if (!root.contains("schordal") || !root["schordal"].is_array()) return errs.push_back("schordal missing"), errs;
  idx = 0;
  for (const auto& a : root["schordal"]) {
    const std::string where = "schordal[" + std::to_string(idx++) + "]";
    need(a, "family", is_str, where);
    need(a, "n", is_int, where);
    need(a, "paper", is_sets, where);
    need(a, "reference", is_sets, where);
    need(a, "missing", is_sets, where);
    need(a, "extra", is_sets, where);
    need(a, "verdict", is_verdict, where);
    if (!a.contains("verdict") || !a.contains("missing") || !a.contains("extra")) continue;
    if (a["verdict"] == "MISMATCH" && a["missing"].empty() && a["extra"].empty()) {
      errs.push_back(where + ": MISMATCH without witness sets");
    }
    if (a["verdict"] == "MATCH" && (!a["missing"].empty() || !a["extra"].empty())) {
      errs.push_back(where + ": MATCH with witness sets");
    }
  }
  return errs;
}

/// The canonical run: every family with a closed form over small
/// parameters, the disputed families, and the strongly chordal catalog
/// (all trees up to 10 vertices, complete graphs, split graphs).
inline std::vector<FamilySpec> default_reconcile_plan() {
  std::vector<FamilySpec> plan;
  auto add = [&](std::string_view family, std::string_view ranges) {
    for (auto& s : expand_params(parse_family(family), ranges)) plan.push_back(std::move(s));
  };
  add("star", "0..12");
  add("complete", "1..12");
  add("empty", "1..10");
  add("ladder", "1..8");
  add("binomial", "0..4");
  for (int k = 1; k <= 4; ++k) {
    for (int r = 1; r <= 3; ++r) {
      if (k * (r + 1) <= 16) plan.push_back({Family::kSplit, {k, r}, 0.0, std::nullopt});
    }
  }
  for (auto [k, h] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 3}}) {
    plan.push_back({Family::kKaryTree, {k, h}, 0.0, std::nullopt});
  }
  add("fibonacci", "2..8");
  add("binary-fibonacci", "0..6");
  for (int k = 1; k <= 3; ++k) add("ktree", std::to_string(k + 1) + "..10," + std::to_string(k));
  add("tree", "1..10");
  return plan;
}

}  // namespace d2cs
