// tests/aug_wp_test.cc

// Copyright 2026 The LAUG Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <stdexcept>

#include <gtest/gtest.h>

#include "laug/aug_wp.h"
#include "laug/error.h"
#include "laug/utf8.h"
#include "props.h"

namespace laug {
namespace {

const SourceRef kSrc{"d", 0};

Utterance Cambridge() {
  return testing::MakeUtterance("I want to go to Cambridge .",
                                {{"attraction", "inform", "dest", "Cambridge"}});
}

std::string SpanText(const AugmentationRecord& r, std::size_t k) {
  return utf8::Substr(r.text, r.spans[k].start, r.spans[k].end);
}

TEST(EditBudget, RoundsAndFloorsAtOne) {
  EXPECT_EQ(EditBudget(6, 0.1), 1u);
  EXPECT_EQ(EditBudget(14, 0.1), 1u);
  EXPECT_EQ(EditBudget(15, 0.1), 2u);
  EXPECT_EQ(EditBudget(20, 0.25), 5u);
  EXPECT_EQ(EditBudget(0, 0.1), 1u);
}

// The worked example: one edit of each kind on a six word sentence.
TEST(ApplyEdaPlan, WorkedExample) {
  const Utterance u = Cambridge();
  EdaPlan syn{EdaOp::kSynonym, {{1, "wishing"}}, {}, {}, {}};
  EdaPlan ins{EdaOp::kInsert, {}, {{1, "need"}}, {}, {}};
  EdaPlan swp{EdaOp::kSwap, {}, {}, {{1, 2}}, {}};
  EdaPlan del{EdaOp::kDelete, {}, {}, {}, {2}};
  EXPECT_EQ(ApplyEdaPlan(u, kSrc, syn).text, "I wishing to go to Cambridge .");
  EXPECT_EQ(ApplyEdaPlan(u, kSrc, ins).text, "I need want to go to Cambridge .");
  EXPECT_EQ(ApplyEdaPlan(u, kSrc, swp).text, "I to want go to Cambridge .");
  EXPECT_EQ(ApplyEdaPlan(u, kSrc, del).text, "I want go to Cambridge .");
  for (const EdaPlan* p : {&syn, &ins, &swp, &del}) {
    auto r = ApplyEdaPlan(u, kSrc, *p);
    EXPECT_TRUE(SameDaSet(r.da, u.da));
    EXPECT_EQ(SpanText(r, 0), "Cambridge");
    EXPECT_EQ(RevertEdits(r), u.text);
    EXPECT_EQ(r.method, Method::kWP);
  }
  auto svr = ReplaceSlotValue(u, kSrc, 0, "Liverpool");
  EXPECT_EQ(svr.text, "I want to go to Liverpool .");
  EXPECT_EQ(svr.da[0].value, "Liverpool");
  EXPECT_EQ(SpanText(svr, 0), "Liverpool");
}

TEST(ApplyEdaPlan, CaseFollowsReplacedWord) {
  const Utterance u = testing::MakeUtterance("Want a taxi .", {});
  EdaPlan syn{EdaOp::kSynonym, {{0, "need"}}, {}, {}, {}};
  EXPECT_EQ(ApplyEdaPlan(u, kSrc, syn).text, "Need a taxi .");
}

TEST(ApplyEdaPlan, AppendAtEnd) {
  const Utterance u = testing::MakeUtterance("I want Cambridge", {{"train", "inform", "dest", "Cambridge"}});
  EdaPlan ins{EdaOp::kInsert, {}, {{3, "please"}}, {}, {}};
  auto r = ApplyEdaPlan(u, kSrc, ins);
  EXPECT_EQ(r.text, "I want Cambridge please");
  EXPECT_EQ(SpanText(r, 0), "Cambridge");
}

TEST(ApplyEdaPlan, InsertNextToGluedTokens) {
  const Utterance u = testing::MakeUtterance("I want Cambridge.", {{"train", "inform", "dest", "Cambridge"}});
  auto r = ApplyEdaPlan(u, kSrc, {EdaOp::kInsert, {}, {{3, "please"}}, {}, {}});
  EXPECT_EQ(r.text, "I want Cambridge please.");
  EXPECT_EQ(SpanText(r, 0), "Cambridge");
  EXPECT_TRUE(ValidateUtterance(r.AsUtterance()).empty());
  const Utterance q = testing::MakeUtterance("\"Hello there\"", {});
  EXPECT_EQ(ApplyEdaPlan(q, kSrc, {EdaOp::kInsert, {}, {{1, "hi"}}, {}, {}}).text,
            "\" hi Hello there\"");
}

TEST(ApplyEdaPlan, RejectsNonWordTokens) {
  const Utterance u = Cambridge();
  EXPECT_THROW(ApplyEdaPlan(u, kSrc, {EdaOp::kSwap, {}, {}, {{1, 5}}, {}}), std::invalid_argument);
  EXPECT_THROW(ApplyEdaPlan(u, kSrc, {EdaOp::kDelete, {}, {}, {}, {5}}), std::invalid_argument);
  EXPECT_THROW(ApplyEdaPlan(u, kSrc, {EdaOp::kSynonym, {{6, "x"}}, {}, {}, {}}),
               std::invalid_argument);
  EXPECT_THROW(ApplyEdaPlan(u, kSrc, {EdaOp::kInsert, {}, {{8, "x"}}, {}, {}}),
               std::invalid_argument);
  EXPECT_THROW(ApplyEdaPlan(u, kSrc, {EdaOp::kDelete, {}, {}, {}, {0, 1, 2, 3, 4}}),
               std::invalid_argument);
}

TEST(SampleEdaPlan, NoCandidates) {
  const auto& th = testing::Resources().thesaurus;
  WpConfig cfg;
  Rng rng(1);
  const Utterance only_value = testing::MakeUtterance("Cambridge", {{"train", "inform", "dest", "Cambridge"}});
  for (EdaOp op : {EdaOp::kSynonym, EdaOp::kInsert, EdaOp::kSwap, EdaOp::kDelete})
    EXPECT_THROW(EdaPerturb(only_value, kSrc, op, th, cfg, rng), NoCandidateError);
  const Utterance one_word = testing::MakeUtterance("Cambridge please", {{"train", "inform", "dest", "Cambridge"}});
  EXPECT_THROW(EdaPerturb(one_word, kSrc, EdaOp::kDelete, th, cfg, rng), NoCandidateError);
  EXPECT_THROW(EdaPerturb(one_word, kSrc, EdaOp::kSwap, th, cfg, rng), NoCandidateError);
}

TEST(SlotValueReplace, DrawsFromPoolOnly) {
  UnseenValuePool pool;
  pool.values["attraction-dest"] = {"Cambridge", "Ely"};
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    auto r = SlotValueReplace(Cambridge(), kSrc, pool, rng);
    EXPECT_EQ(r.da[0].value, "Ely");
    EXPECT_EQ(r.text, "I want to go to Ely .");
  }
  pool.values.clear();
  EXPECT_THROW(SlotValueReplace(Cambridge(), kSrc, pool, rng), NoSlotError);
}

TEST(WpAugment, FallsBackWhenSvrImpossible) {
  WpConfig cfg;
  cfg.p_svr = 1.0;
  Rng rng(5);
  auto r = WpAugment(Cambridge(), kSrc, cfg, testing::Resources().thesaurus, {}, rng);
  EXPECT_TRUE(SameDaSet(r.da, Cambridge().da));
  EXPECT_NE(r.text, Cambridge().text);
}

TEST(WpAugment, DeterministicForSeed) {
  WpConfig cfg;
  cfg.stopwords = testing::Resources().stopwords;
  for (const auto& ref : testing::FixtureUserTurns()) {
    const Utterance& u = ref.dialog->turns[ref.turn];
    Rng a(9), b(9);
    std::string ta, tb;
    try {
      ta = WpAugment(u, kSrc, cfg, testing::Resources().thesaurus,
                     testing::Resources().unseen_values, a).text;
    } catch (const NoCandidateError&) {
    }
    try {
      tb = WpAugment(u, kSrc, cfg, testing::Resources().thesaurus,
                     testing::Resources().unseen_values, b).text;
    } catch (const NoCandidateError&) {
    }
    EXPECT_EQ(ta, tb);
  }
}

TEST(WpConfig, Validate) {
  WpConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.alpha = 0;
  EXPECT_THROW(cfg.Validate(), ValidationError);
  cfg.alpha = 0.1;
  cfg.p_svr = 1.5;
  EXPECT_THROW(cfg.Validate(), ValidationError);
}

TEST(EdaProperty, LabelsSpansAndBudget) {
  auto res = testing::EdaSuite(1200, 2026);
  EXPECT_TRUE(res.ok()) << res.Summary();
}

}  // namespace
}  // namespace laug
