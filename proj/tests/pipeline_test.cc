// tests/pipeline_test.cc

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

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "laug/error.h"
#include "laug/pipeline.h"
#include "props.h"

namespace laug {
namespace {

TEST(EvenSplit, Examples) {
  EXPECT_EQ(EvenSplit(10, 4), (std::vector<std::size_t>{3, 3, 2, 2}));
  EXPECT_EQ(EvenSplit(3, 4), (std::vector<std::size_t>{1, 1, 1, 0}));
  EXPECT_EQ(EvenSplit(0, 2), (std::vector<std::size_t>{0, 0}));
  EXPECT_THROW(EvenSplit(5, 0), std::invalid_argument);
  for (std::size_t n = 0; n < 200; ++n)
    for (std::size_t k = 1; k < 9; ++k) {
      auto v = EvenSplit(n, k);
      EXPECT_EQ(std::accumulate(v.begin(), v.end(), std::size_t{0}), n);
      EXPECT_LE(*std::max_element(v.begin(), v.end()) - *std::min_element(v.begin(), v.end()), 1u);
    }
}

TEST(RunConfig, ValidateNamesField) {
  RunConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  auto expect_field = [](RunConfig c, const std::string& field) {
    try {
      c.Validate();
      ADD_FAILURE() << field;
    } catch (const ValidationError& e) {
      EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
    }
  };
  RunConfig c = cfg;
  c.ratio = 0;
  expect_field(c, "ratio");
  c = cfg;
  c.methods.clear();
  expect_field(c, "methods");
  c = cfg;
  c.wp.alpha = 2;
  expect_field(c, "wp.alpha");
  c = cfg;
  c.sr.p_liaison = -1;
  expect_field(c, "sr.p_liaison");
  c = cfg;
  c.tp.detect_threshold = 0;
  expect_field(c, "tp.detect_threshold");
}

TEST(RunConfig, HashTracksOutputFields) {
  RunConfig a, b;
  EXPECT_EQ(a.Hash(), b.Hash());
  b.threads = 7;  // does not affect outputs
  EXPECT_EQ(a.Hash(), b.Hash());
  b.seed = 43;
  EXPECT_NE(a.Hash(), b.Hash());
  b = a;
  b.sr.p_confuse = 0.5;
  EXPECT_NE(a.Hash(), b.Hash());
  EXPECT_EQ(a.Hash().size(), 16u);
}

TEST(UserTurns, SkipsQuarantinedAndOtherSplits) {
  const Corpus& c = testing::Fixture();
  std::size_t total = 0;
  for (Split s : {Split::kTrain, Split::kValidation, Split::kTest}) total += UserTurns(c, s).size();
  EXPECT_EQ(total, 200u);
  EXPECT_EQ(UserTurns(c, Split::kTrain).size(), 148u);
}

TEST(Augmenter, PoolRestrictedToUnseenValues) {
  RunConfig cfg;
  Augmenter aug(testing::Fixture(), cfg);
  const Ontology train = SplitOntology(testing::Fixture(), Split::kTrain);
  for (const auto& [key, vals] : aug.resources().unseen_values.values) {
    auto it = train.find(key);
    if (it == train.end()) continue;
    for (const auto& v : vals)
      EXPECT_EQ(std::find(it->second.begin(), it->second.end(), v), it->second.end()) << v;
  }
  EXPECT_THROW(aug.Augment(Method::kWP, {"nope", 0}), ValidationError);
}

TEST(Augmenter, SameRecordsForAnyThreadCount) {
  RunConfig one, three;
  one.threads = 1;
  three.threads = 3;
  Augmenter a(testing::Fixture(), one), b(testing::Fixture(), three);
  std::vector<std::pair<SourceRef, std::uint64_t>> jobs;
  for (const auto& src : UserTurns(testing::Fixture(), Split::kTest)) jobs.emplace_back(src, 0);
  for (Method m : {Method::kWP, Method::kTP, Method::kSR, Method::kSD}) {
    auto ra = a.AugmentAll(m, jobs), rb = b.AugmentAll(m, jobs);
    ASSERT_EQ(ra.size(), rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
      ASSERT_EQ(ra[i].has_value(), rb[i].has_value());
      if (ra[i]) EXPECT_EQ(ra[i]->text, rb[i]->text);
    }
  }
}

TEST(Compose, RatioSweep) {
  const Corpus& c = testing::Fixture();
  for (double ratio : {0.1, 0.5, 1.0, 2.0, 4.0}) {
    RunConfig cfg;
    cfg.seed = 7;
    cfg.ratio = ratio;
    Augmenter aug(c, cfg);
    auto res = ComposeAugmentedSet(c, cfg, aug);
    const std::size_t target = static_cast<std::size_t>(std::llround(ratio * 148));
    EXPECT_EQ(res.target, target);
    const auto split = EvenSplit(target, 4);
    std::size_t total = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_EQ(res.counts[cfg.methods[i]], split[i]) << ratio;
      total += res.counts[cfg.methods[i]];
    }
    std::size_t aug_dialogs = 0;
    for (const auto& d : res.corpus.dialogs) {
      EXPECT_EQ(d.split, Split::kTrain);
      if (!d.augment) continue;
      ++aug_dialogs;
      const Dialog* src = c.Find(d.augment->source_dialog);
      ASSERT_TRUE(src);
      EXPECT_EQ(src->split, Split::kTrain);
    }
    EXPECT_EQ(aug_dialogs, total);
    EXPECT_TRUE(res.corpus.issues.empty());
  }
}

TEST(Compose, DeterministicBytes) {
  const Corpus& c = testing::Fixture();
  RunConfig cfg;
  cfg.seed = 7;
  cfg.ratio = 0.5;
  Augmenter a(c, cfg), b(c, cfg);
  EXPECT_EQ(SerializeCorpus(ComposeAugmentedSet(c, cfg, a).corpus),
            SerializeCorpus(ComposeAugmentedSet(c, cfg, b).corpus));
  RunConfig other = cfg;
  other.seed = 8;
  Augmenter o(c, other);
  EXPECT_NE(SerializeCorpus(ComposeAugmentedSet(c, cfg, a).corpus),
            SerializeCorpus(ComposeAugmentedSet(c, other, o).corpus));
}

TEST(PackageRecord, RoundTripsThroughCorpus) {
  const Corpus& c = testing::Fixture();
  RunConfig cfg;
  Augmenter aug(c, cfg);
  const Corpus sd = AugmentSplit(c, Method::kSD, Split::kTest, aug);
  EXPECT_EQ(sd.dialogs.size(), 40u);
  const Corpus back = ParseCorpus(SerializeCorpus(sd));
  auto recs = RecordsFromCorpus(back);
  ASSERT_EQ(recs.size(), 40u);
  for (const auto& r : recs) {
    EXPECT_EQ(r.method, Method::kSD);
    const Dialog* src = c.Find(r.source.dialog_id);
    ASSERT_TRUE(src);
    EXPECT_TRUE(SameDaSet(r.da, src->turns[r.source.turn].da));
  }
  // Context is every earlier turn of the source dialog.
  for (const auto& d : back.dialogs)
    EXPECT_EQ(d.augment->context.size(), d.augment->source_turn);
}

TEST(Baseline, RunsEveryMethod) {
  const Corpus& c = testing::Fixture();
  RunConfig cfg;
  Augmenter aug(c, cfg);
  auto res = RunBaseline(c, cfg, aug);
  EXPECT_EQ(res.augmented.size(), 4u);
  EXPECT_GT(res.original.f1, 0.3);
  for (const auto& [m, n] : res.examples) EXPECT_GT(n, 0u) << MethodName(m);
}

TEST(Reports, TablesAndJson) {
  F1Report r;
  r.true_positives = 3;
  r.f1 = 0.5;
  EXPECT_NE(F1Json(r).find("\"true_positives\":3"), std::string::npos);
  auto table = F1Table({{"Ori", r}});
  EXPECT_NE(table.find("Ori"), std::string::npos);
  EXPECT_NE(table.find("50.00"), std::string::npos);
  ChangeRateReport cr;
  cr.slot_rate = 0.25;
  EXPECT_NE(ChangeRateTable({{"WP", cr}}).find("25.00"), std::string::npos);
}

}  // namespace
}  // namespace laug
