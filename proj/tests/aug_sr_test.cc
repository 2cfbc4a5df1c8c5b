// tests/aug_sr_test.cc

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

#include <sstream>

#include <gtest/gtest.h>

#include "laug/aug_sr.h"
#include "laug/error.h"
#include "laug/utf8.h"
#include "props.h"

namespace laug {
namespace {

const SourceRef kSrc{"d", 0};

ConfusionTable Table(const std::string& text) {
  std::istringstream in(text);
  return ConfusionTable::Parse(in);
}

std::string SpanText(const AugmentationRecord& r, std::size_t k) {
  return utf8::Substr(r.text, r.spans[k].start, r.spans[k].end);
}

TEST(SrGolden, LeicesterBecomesLester) {
  const Utterance u = testing::MakeUtterance(
      "I'm leaving from Leicester and should arrive in Cambridge by 13:45.",
      {{"train", "inform", "depart", "Leicester"},
       {"train", "inform", "dest", "Cambridge"},
       {"train", "inform", "arrive", "13:45"}});
  SrConfig cfg;
  cfg.p_confuse = 1;
  cfg.p_liaison = 0;
  Rng rng(1);
  auto r = SrAugment(u, kSrc, cfg, Table("leicester => lester\n"), PronunciationLexicon{}, rng);
  EXPECT_EQ(r.text, "i'm leaving from lester and should arrive in cambridge by thirteen forty five");
  ASSERT_EQ(r.da.size(), 3u);
  ASSERT_EQ(r.spans.size(), 3u);
  EXPECT_EQ(r.da[0].value, "lester");
  EXPECT_EQ(r.da[1].value, "cambridge");
  EXPECT_EQ(r.da[2].value, "thirteen forty five");
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(SpanText(r, k), r.da[r.spans[k].item].value);
  EXPECT_EQ(r.method, Method::kSR);
  EXPECT_TRUE(ValidateUtterance(r.AsUtterance()).empty());
}

TEST(SrGolden, Liaison) {
  const Utterance u = testing::MakeUtterance("Book it for 3 people.", {{"hotel", "book", "people", "3"}});
  SrConfig cfg;
  cfg.p_confuse = 0;
  cfg.p_liaison = 1;
  Rng rng(1);
  auto r = SrAugment(u, kSrc, cfg, Table("for + three => free\n"), PronunciationLexicon{}, rng);
  EXPECT_EQ(r.text, "book it free people");
  // ratio("free", "three") = 2*3/9 < 0.7, so the value is lost.
  EXPECT_TRUE(r.da.empty());
  EXPECT_TRUE(r.spans.empty());
  EXPECT_EQ(r.notes.back(), "dropped hotel-people = 3");
}

TEST(SrGolden, QuietChannelOnlyNormalizes) {
  const Utterance u = testing::MakeUtterance("Leave at 09:05, please.", {{"taxi", "inform", "leave", "09:05"}});
  SrConfig cfg;
  cfg.p_confuse = 0;
  cfg.p_liaison = 0;
  Rng rng(1);
  auto r = SrAugment(u, kSrc, cfg, testing::Resources().confusion, testing::Resources().lexicon, rng);
  EXPECT_EQ(r.text, "leave at nine oh five please");
  ASSERT_EQ(r.da.size(), 1u);
  EXPECT_EQ(r.da[0].value, "nine oh five");
  cfg.strip_case_punct = false;
  Rng rng2(1);
  EXPECT_EQ(SrAugment(u, kSrc, cfg, {}, {}, rng2).text, "Leave at nine oh five, please.");
}

TEST(SrRedetect, DropsLostValuesAndKeepsOthers) {
  const Utterance u = testing::MakeUtterance(
      "Cheap hotel in the north please.",
      {{"hotel", "inform", "price", "Cheap"}, {"hotel", "inform", "area", "north"},
       {"hotel", "request", "phone", "?"}});
  auto r = RedetectValues("hotel in the nerth please", u, kSrc, {});
  // "cheap" is gone; "nerth" is within 0.8 of "north".
  ASSERT_EQ(r.da.size(), 2u);
  EXPECT_EQ(r.da[0].slot, "area");
  EXPECT_EQ(r.da[0].value, "nerth");
  EXPECT_EQ(r.da[1].value, "?");
  ASSERT_EQ(r.spans.size(), 1u);
  EXPECT_EQ(r.spans[0].item, 0u);
  bool noted = false;
  for (const auto& n : r.notes) noted |= n.find("dropped hotel-price") != std::string::npos;
  EXPECT_TRUE(noted);
}

TEST(SoundAlikes, TableThenLexicon) {
  const auto& res = testing::Resources();
  auto c = SoundAlikes("Leicester", res.confusion, res.lexicon);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].word, "lester");
  auto n = SoundAlikes("three", {}, res.lexicon);
  bool free = false;
  for (const auto& x : n) free |= x.word == "free";
  EXPECT_TRUE(free);
  EXPECT_TRUE(SoundAlikes("three", {}, {}).empty());
}

TEST(LiaisonMerge, SharedBoundaryPhoneme) {
  const auto& lex = testing::Resources().lexicon;
  EXPECT_EQ(LiaisonMerge("for", "three", testing::Resources().confusion, lex), "free");
  // "bus stop": S + S -> "bustop".
  EXPECT_EQ(LiaisonMerge("bus", "stop", {}, lex), "bustop");
  EXPECT_FALSE(LiaisonMerge("want", "hotel", {}, lex));
}

TEST(ApproximatePhonemes, LetterRules) {
  EXPECT_EQ(ApproximatePhonemes("Zorbex").phonemes,
            (std::vector<std::string>{"Z", "AO", "R", "B", "EH", "K", "S"}));
  EXPECT_EQ(ApproximatePhonemes("kitty").phonemes,
            (std::vector<std::string>{"K", "IH", "T", "IY"}));
  EXPECT_TRUE(ApproximatePhonemes("42").phonemes.empty());
}

TEST(SrConfig, Validate) {
  SrConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.p_confuse = -0.1;
  EXPECT_THROW(cfg.Validate(), ValidationError);
  cfg.p_confuse = 0;
  cfg.redetect_threshold = 0;
  EXPECT_THROW(cfg.Validate(), ValidationError);
}

TEST(SrProperty, SurvivingValuesSitAtSpans) {
  auto res = testing::SrSuite(1200, 2026);
  EXPECT_TRUE(res.ok()) << res.Summary();
}

}  // namespace
}  // namespace laug
