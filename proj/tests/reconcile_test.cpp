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

#include <gtest/gtest.h>

#include "d2cs/reconcile.hpp"

namespace d2cs {
namespace {

FamilySpec spec(Family f, std::vector<long long> p) { return {f, std::move(p), 0.0, std::nullopt}; }

const ReconcileEntry& only_entry(const ReconcileReport& r) {
  EXPECT_EQ(r.entries.size(), 1u);
  return r.entries.front();
}

TEST(ExpandParams, CartesianProductFirstSlowest) {
  const auto specs = expand_params(Family::kSplit, "1..2,3..4");
  ASSERT_EQ(specs.size(), 4u);
  EXPECT_EQ(specs[0].params, (std::vector<long long>{1, 3}));
  EXPECT_EQ(specs[1].params, (std::vector<long long>{1, 4}));
  EXPECT_EQ(specs[3].params, (std::vector<long long>{2, 4}));
  EXPECT_EQ(expand_params(Family::kStar, "5").size(), 1u);
}

TEST(ExpandParams, RandomCarriesProbabilityAndSeed) {
  const auto specs = expand_params(Family::kRandomConnected, "4..6,0.5", 9);
  ASSERT_EQ(specs.size(), 3u);
  EXPECT_DOUBLE_EQ(specs[1].probability, 0.5);
  EXPECT_EQ(specs[1].seed, 9u);
  EXPECT_THROW(expand_params(Family::kRandomConnected, "4"), InputError);
  EXPECT_THROW(expand_params(Family::kRandomConnected, "4,abc"), InputError);
}

TEST(ExpandParams, TreeSizeExpandsCatalog) {
  EXPECT_EQ(expand_params(Family::kTree, "1..6").size(), 1u + 1 + 1 + 2 + 3 + 6);
  EXPECT_EQ(expand_params(Family::kTree, "7,3").size(), 1u);
}

TEST(ExpandParams, RejectsBadRanges) {
  EXPECT_THROW(expand_params(Family::kStar, "5..2"), InputError);
  EXPECT_THROW(expand_params(Family::kStar, "x"), InputError);
  EXPECT_THROW(expand_params(Family::kStar, "1,2"), InputError);
  EXPECT_THROW(expand_params(Family::kSplit, "1"), InputError);
}

TEST(FormulaFor, CoversClosedFormFamilies) {
  EXPECT_EQ(formula_for(spec(Family::kStar, {3}))->value, BigCount(12));
  EXPECT_FALSE(formula_for(spec(Family::kPath, {4})));
  EXPECT_TRUE(formula_for(spec(Family::kKTree, {5, 2}))->disputed);
  EXPECT_THROW(formula_for(spec(Family::kKaryTree, {1, 3})), InputError);
}

TEST(Reconcile, MatchMismatchSkipped) {
  EXPECT_EQ(only_entry(run_reconcile({spec(Family::kStar, {5})})).verdict, Verdict::kMatch);
  EXPECT_EQ(only_entry(run_reconcile({spec(Family::kComplete, {6})})).verdict, Verdict::kMatch);

  const auto ladder = run_reconcile({spec(Family::kLadder, {3})});
  EXPECT_EQ(only_entry(ladder).verdict, Verdict::kMismatch);
  EXPECT_EQ(only_entry(ladder).oracle_value, BigCount(28));
  EXPECT_EQ(only_entry(ladder).formula_value, BigCount(24));

  const auto path = run_reconcile({spec(Family::kPath, {5})});
  EXPECT_EQ(only_entry(path).verdict, Verdict::kSkipped);
  EXPECT_FALSE(only_entry(path).reason.empty());
  EXPECT_EQ(only_entry(path).oracle_value, BigCount(13));

  const auto singular = run_reconcile({spec(Family::kKaryTree, {1, 3})});
  EXPECT_EQ(only_entry(singular).verdict, Verdict::kSkipped);
  EXPECT_NE(only_entry(singular).reason.find("formula undefined"), std::string::npos);
}

TEST(Reconcile, OverLimitIsSkippedNotFatal) {
  ReconcileOptions opt;
  opt.oracle.limit = 8;
  const auto r = run_reconcile({spec(Family::kStar, {9}), spec(Family::kStar, {3})}, opt);
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.entries[0].verdict, Verdict::kSkipped);
  EXPECT_NE(r.entries[0].reason.find("oracle limit"), std::string::npos);
  EXPECT_EQ(r.entries[1].verdict, Verdict::kMatch);
}

TEST(Reconcile, OverLimitNotesEnumeratorCount) {
  const auto r = run_reconcile({spec(Family::kFibonacciTree, {8})});
  EXPECT_EQ(only_entry(r).verdict, Verdict::kSkipped);
  EXPECT_FALSE(only_entry(r).oracle_value);
  EXPECT_EQ(only_entry(r).notes, "enum-all count 310, equal to the formula at n+1");
}

TEST(Reconcile, FibonacciOffsetNote) {
  const auto r = run_reconcile({spec(Family::kFibonacciTree, {5})});
  EXPECT_EQ(only_entry(r).verdict, Verdict::kMismatch);
  EXPECT_EQ(only_entry(r).notes, "oracle equals the formula at n+1");
}

TEST(Reconcile, KTreeDisputedNote) {
  const auto r = run_reconcile({spec(Family::kKTree, {3, 1})});
  EXPECT_TRUE(only_entry(r).disputed);
  EXPECT_NE(only_entry(r).notes.find("k-tree shape"), std::string::npos);
}

TEST(Reconcile, SchordalAudits) {
  const auto r = run_reconcile({spec(Family::kPath, {5}), spec(Family::kCycle, {5}), spec(Family::kComplete, {1})});
  // C_5 is not strongly chordal, K_1 is audited but skipped.
  ASSERT_EQ(r.schordal.size(), 2u);
  const auto& p5 = r.schordal[0];
  ASSERT_TRUE(p5.oracle);
  EXPECT_EQ(*p5.oracle, p5.reference);
  EXPECT_EQ(p5.missing.empty() && p5.extra.empty(), p5.verdict == Verdict::kMatch);
  EXPECT_EQ(r.schordal[1].verdict, Verdict::kSkipped);
  EXPECT_FALSE(r.schordal[1].reason.empty());
}

TEST(ReportJson, ValidAndDeterministic) {
  const std::vector<FamilySpec> plan{spec(Family::kStar, {3}), spec(Family::kLadder, {4}), spec(Family::kPath, {4}),
                                     spec(Family::kFibonacciTree, {4}), spec(Family::kRandomConnected, {6})};
  auto with_seed = plan;
  with_seed.back().probability = 0.4;
  with_seed.back().seed = 3;
  const Json a = to_json(run_reconcile(with_seed));
  const Json b = to_json(run_reconcile(with_seed));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_TRUE(validate_report(a).empty());
  EXPECT_EQ(a["schema"], "d2cs/1");
  EXPECT_EQ(a["entries"][0]["formula_value"], "12");
  EXPECT_EQ(a["entries"][4]["params"].size(), 2u);
  EXPECT_EQ(a["summary"]["entries"]["match"], 1);
}

TEST(ReportJson, ValidatorCatchesTampering) {
  Json j = to_json(run_reconcile({spec(Family::kStar, {3}), spec(Family::kPath, {5})}));
  ASSERT_TRUE(validate_report(j).empty());

  Json flipped = j;
  flipped["entries"][0]["verdict"] = "MISMATCH";
  EXPECT_FALSE(validate_report(flipped).empty());

  Json faked = j;
  faked["entries"][0]["oracle_value"] = "13";
  EXPECT_FALSE(validate_report(faked).empty());

  Json no_reason = j;
  no_reason["entries"][1]["reason"] = nullptr;
  EXPECT_FALSE(validate_report(no_reason).empty());

  Json bad_tag = j;
  bad_tag["schema"] = "d2cs/0";
  EXPECT_FALSE(validate_report(bad_tag).empty());

  Json no_witness = j;
  ASSERT_FALSE(no_witness["schordal"].empty());
  no_witness["schordal"][0]["verdict"] = "MISMATCH";
  no_witness["schordal"][0]["missing"] = Json::array();
  no_witness["schordal"][0]["extra"] = Json::array();
  EXPECT_FALSE(validate_report(no_witness).empty());

  EXPECT_FALSE(validate_report(Json::array()).empty());
}

}  // namespace
}  // namespace d2cs
