// tests/evalkit_test.cc

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

#include "laug/error.h"
#include "laug/evalkit.h"
#include "laug/rng.h"
#include "props.h"

namespace laug {
namespace {

const DialogActItem kA{"train", "inform", "dest", "Cambridge"};
const DialogActItem kB{"train", "inform", "day", "friday"};
const DialogActItem kC{"hotel", "request", "phone", "?"};

TEST(OverallF1, Examples) {
  std::vector<DaSet> pred{{kA, kB}}, gold{{kA, kC}};
  auto r = OverallF1(pred, gold);
  EXPECT_EQ(r.true_positives, 1u);
  EXPECT_EQ(r.false_positives, 1u);
  EXPECT_EQ(r.false_negatives, 1u);
  EXPECT_DOUBLE_EQ(r.f1, 0.5);

  // Two turns: 3 gold items, 2 predicted and both right. P=1, R=2/3.
  pred = {{kA}, {kC}};
  gold = {{kA, kB}, {kC}};
  EXPECT_DOUBLE_EQ(OverallF1(pred, gold).f1, 0.8);
}

TEST(OverallF1, CaseSpaceAndDuplicates) {
  DialogActItem a2{"Train", "inform", "dest", "  cambridge "};
  std::vector<DaSet> pred{{a2, kA}}, gold{{kA}};
  auto r = OverallF1(pred, gold);
  EXPECT_EQ(r.true_positives, 1u);
  EXPECT_EQ(r.false_positives, 0u);
  EXPECT_DOUBLE_EQ(r.f1, 1.0);
}

TEST(OverallF1, EmptyConventions) {
  std::vector<DaSet> none{{}}, some{{kA}};
  EXPECT_DOUBLE_EQ(OverallF1(none, none).f1, 1.0);
  auto miss = OverallF1(none, some);
  EXPECT_DOUBLE_EQ(miss.precision, 1.0);
  EXPECT_DOUBLE_EQ(miss.recall, 0.0);
  EXPECT_DOUBLE_EQ(miss.f1, 0.0);
  EXPECT_DOUBLE_EQ(OverallF1(some, none).f1, 0.0);
  EXPECT_DOUBLE_EQ(OverallF1(std::vector<DaSet>{}, std::vector<DaSet>{}).f1, 1.0);
  EXPECT_THROW(OverallF1(none, std::vector<DaSet>{}), std::invalid_argument);
}

DaSet RandomSet(Rng& rng) {
  static const std::vector<std::string> domains{"train", "Train", "hotel"};
  static const std::vector<std::string> slots{"dest", "day", "", "phone"};
  static const std::vector<std::string> values{"Cambridge", "cambridge", "ely", " ely", "?", ""};
  DaSet out;
  const std::size_t n = rng.Uniform(5);
  for (std::size_t k = 0; k < n; ++k)
    out.push_back({domains[rng.Uniform(domains.size())], rng.Bernoulli(0.5) ? "inform" : "request",
                   slots[rng.Uniform(slots.size())], values[rng.Uniform(values.size())]});
  return out;
}

TEST(OverallF1, MatchesBruteForce) {
  Rng rng(77);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t turns = 1 + rng.Uniform(6);
    std::vector<DaSet> pred, gold;
    for (std::size_t t = 0; t < turns; ++t) {
      pred.push_back(RandomSet(rng));
      gold.push_back(RandomSet(rng));
    }
    const auto got = OverallF1(pred, gold);
    const auto want = testing::BruteForceF1(pred, gold);
    ASSERT_EQ(got.true_positives, want.tp);
    ASSERT_EQ(got.false_positives, want.fp);
    ASSERT_EQ(got.false_negatives, want.fn);
    ASSERT_NEAR(got.f1, want.f1, 1e-12);
  }
}

// --- change rates ---

Corpus TenTurns() {
  Corpus c;
  for (int i = 0; i < 10; ++i) {
    Dialog d{"d" + std::to_string(i), Split::kTrain, {}, {}, false};
    d.turns.push_back(testing::MakeUtterance(
        "From Ely to Cambridge.",
        {{"train", "inform", "depart", "Ely"}, {"train", "inform", "dest", "Cambridge"},
         {"train", "request", "leave", "?"}}));
    c.dialogs.push_back(d);
  }
  return c;
}

AugmentationRecord Copy(const Dialog& d) {
  const Utterance& u = d.turns[0];
  return {Method::kWP, {d.id, 0}, u.text, u.da, u.spans, {}, {}};
}

TEST(ChangeRates, CopiesAreZero) {
  const Corpus c = TenTurns();
  std::vector<AugmentationRecord> recs;
  for (const auto& d : c.dialogs) recs.push_back(Copy(d));
  auto r = ChangeRates(c, recs);
  EXPECT_EQ(r.records, 10u);
  EXPECT_EQ(r.value_fields, 20u);
  EXPECT_DOUBLE_EQ(r.char_rate, 0);
  EXPECT_DOUBLE_EQ(r.word_rate, 0);
  EXPECT_DOUBLE_EQ(r.slot_rate, 0);
}

TEST(ChangeRates, OneReplacedValue) {
  const Corpus c = TenTurns();
  std::vector<AugmentationRecord> recs;
  for (const auto& d : c.dialogs) recs.push_back(Copy(d));
  recs[3].text = "From Ely to York.";
  recs[3].da[1].value = "York";
  auto r = ChangeRates(c, recs);
  EXPECT_EQ(r.changed_fields, 1u);
  EXPECT_DOUBLE_EQ(r.slot_rate, 1.0 / 20);
  // Hand counted: "Cambridge" -> "York" keeps the r, so 8 edits over 22
  // characters; one word in five tokens.
  EXPECT_NEAR(r.char_rate, 8.0 / 22 / 10, 1e-12);
  EXPECT_NEAR(r.word_rate, 1.0 / 5 / 10, 1e-12);
}

TEST(ChangeRates, CaseOnlyChangeIsNotASlotChange) {
  const Corpus c = TenTurns();
  std::vector<AugmentationRecord> recs{Copy(c.dialogs[0])};
  recs[0].da[1].value = "CAMBRIDGE";
  EXPECT_DOUBLE_EQ(ChangeRates(c, recs).slot_rate, 0);
}

TEST(ChangeRates, EmptyAndUnknown) {
  const Corpus c = TenTurns();
  auto r = ChangeRates(c, std::vector<AugmentationRecord>{});
  EXPECT_EQ(r.records, 0u);
  EXPECT_DOUBLE_EQ(r.char_rate, 0);
  AugmentationRecord stray{Method::kWP, {"nope", 0}, "x", {}, {}, {}, {}};
  EXPECT_THROW(ChangeRates(c, std::vector<AugmentationRecord>{stray}), ValidationError);
}

// Rates are means of per-record values, so scaling the record list changes
// nothing.
TEST(ChangeRates, Homogeneous) {
  const Corpus c = TenTurns();
  std::vector<AugmentationRecord> one{Copy(c.dialogs[0])};
  one[0].text = "From Ely to Cambridge, please.";
  std::vector<AugmentationRecord> many(7, one[0]);
  auto a = ChangeRates(c, one), b = ChangeRates(c, many);
  EXPECT_NEAR(a.char_rate, b.char_rate, 1e-12);
  EXPECT_NEAR(a.word_rate, b.word_rate, 1e-12);
}

TEST(EditDistance, Examples) {
  EXPECT_EQ(EditDistance(std::string("kitten"), std::string("sitting")), 3u);
  EXPECT_EQ(EditDistance(std::string(""), std::string("abc")), 3u);
  EXPECT_EQ(EditDistance(std::vector<std::string>{"a", "b"}, std::vector<std::string>{"b"}), 1u);
}

// --- LexiconLu ---

TEST(LexiconLu, ValuesAndKeywords) {
  Corpus c;
  for (int i = 0; i < 3; ++i) {
    Dialog d{"d" + std::to_string(i), Split::kTrain, {}, {}, false};
    d.turns.push_back(testing::MakeUtterance(
        "I need a train to Cambridge.", {{"train", "inform", "dest", "Cambridge"},
                                         {"train", "inform", "", ""}}));
    d.turns.push_back({Speaker::kSystem, "Ok.", {}, {}});
    d.turns.push_back(testing::MakeUtterance("What is the phone number?",
                                             {{"hotel", "request", "phone", "?"}}));
    c.dialogs.push_back(d);
  }
  Dialog held{"t", Split::kTest, {}, {}, false};
  held.turns.push_back(testing::MakeUtterance("Go to Oxford.", {{"train", "inform", "dest", "Oxford"}}));
  c.dialogs.push_back(held);

  const LexiconLu lu = LexiconLu::Train(c);
  EXPECT_EQ(lu.value_count(), 1u);
  auto p = lu.PredictText("A train to cambridge please");
  DaSet want{{"train", "inform", "dest", "cambridge"}, {"train", "inform", "", ""}};
  EXPECT_TRUE(SameDaSet(p, want));
  EXPECT_TRUE(SameDaSet(lu.PredictText("phone?"), DaSet{{"hotel", "request", "phone", "?"}}));
  EXPECT_TRUE(lu.PredictText("Go to Oxford.").empty());

  LuExample ex;
  EXPECT_TRUE(lu.Predict(ex).empty());
  ex.context = {{Speaker::kUser, "phone?"}};
  EXPECT_EQ(lu.Predict(ex).size(), 1u);

  Corpus no_train;
  no_train.dialogs.push_back(held);
  EXPECT_THROW(LexiconLu::Train(no_train), ValidationError);
}

TEST(LexiconLu, BeatsChanceOnFixture) {
  const Corpus& c = testing::Fixture();
  const LexiconLu lu = LexiconLu::Train(c);
  std::vector<DaSet> pred, gold;
  for (const auto& ex : ExtractLuExamples(c, 2, Split::kTest)) {
    pred.push_back(lu.Predict(ex));
    gold.push_back(ex.gold);
  }
  EXPECT_GT(OverallF1(pred, gold).f1, 0.3);
}

}  // namespace
}  // namespace laug
