// laug/pipeline.h

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

// Corpus-level runs: per-method augmentation, equal-proportion composition,
// change-rate statistics and the lexicon baseline. These back the `laug`
// command line tool.

#ifndef LAUG_PIPELINE_H_
#define LAUG_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "laug/aug_sr.h"
#include "laug/aug_tp.h"
#include "laug/aug_wp.h"
#include "laug/corpus.h"
#include "laug/evalkit.h"
#include "laug/resources.h"

namespace laug {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  std::uint64_t seed = 42;
  std::vector<Method> methods = {Method::kWP, Method::kTP, Method::kSR, Method::kSD};
  double ratio = 1.0;
  WpConfig wp;
  TpConfig tp;
  SrConfig sr;
  std::string tp_endpoint;  // empty: built-in templates
  double tp_timeout = 30.0;
  std::filesystem::path resources;  // empty: DefaultResourceDir()
  std::filesystem::path sd_dist;    // empty: resources/disfluency.txt
  std::size_t context = 2;          // LU window m
  std::size_t threads = 0;          // 0: hardware concurrency

  // Throws ValidationError naming the field.
  void Validate() const;
  // Canonical JSON of every field that affects outputs, and its hash.
  std::string ToJson() const;
  std::string Hash() const;
};

// Everything the four methods need, built once per run.
class Augmenter {
 public:
  // Loads resources, restricts the unseen-value pool to values absent from
  // the training split, and picks the paraphrase generator.
  Augmenter(const Corpus& corpus, const RunConfig& cfg);
  Augmenter(const Corpus& corpus, const RunConfig& cfg, ResourceBundle res,
            std::shared_ptr<ParaphraseGenerator> gen);

  // Empty when the method has nothing to do on this turn. `draw` selects an
  // independent random stream for repeated draws of the same turn.
  std::optional<AugmentationRecord> Augment(Method m, const SourceRef& src,
                                            std::uint64_t draw = 0) const;

  // Parallel over jobs; output order matches job order.
  std::vector<std::optional<AugmentationRecord>> AugmentAll(
      Method m, const std::vector<std::pair<SourceRef, std::uint64_t>>& jobs) const;

  const ResourceBundle& resources() const { return res_; }
  const std::vector<std::string>& pool_removed() const { return pool_removed_; }

 private:
  const Corpus& corpus_;
  RunConfig cfg_;
  ResourceBundle res_;
  std::shared_ptr<ParaphraseGenerator> gen_;
  Ontology train_ontology_;
  std::vector<std::string> pool_removed_;
};

// User turns of non-quarantined, non-augmented dialogs in `split`.
std::vector<SourceRef> UserTurns(const Corpus& c, Split split);

// N split over k methods; the first N mod k get one extra.
std::vector<std::size_t> EvenSplit(std::size_t n, std::size_t k);

// Single-turn dialog carrying the record, with the source's full preceding
// history in its metadata.
Dialog PackageRecord(const AugmentationRecord& rec, const Corpus& orig, Split split,
                     const std::string& id);
std::vector<AugmentationRecord> RecordsFromCorpus(const Corpus& c);

// One record per user turn of `split` (failed turns skipped), packaged.
Corpus AugmentSplit(const Corpus& c, Method m, Split split, const Augmenter& aug);

struct ComposeResult {
  Corpus corpus;
  std::map<Method, std::size_t> counts;
  std::size_t target = 0;
};
// Original train dialogs plus round(ratio * train user turns) records split
// evenly over cfg.methods.
ComposeResult ComposeAugmentedSet(const Corpus& c, const RunConfig& cfg, const Augmenter& aug);

struct BaselineResult {
  F1Report original;
  std::map<Method, F1Report> augmented;
  std::map<Method, std::size_t> examples;
};
BaselineResult RunBaseline(const Corpus& c, const RunConfig& cfg, const Augmenter& aug);

// JSON and plain-text renderings used by the CLI.
std::string F1Json(const F1Report& r);
std::string ChangeRateJson(const ChangeRateReport& r);
std::string ChangeRateTable(const std::map<std::string, ChangeRateReport>& rows);
std::string F1Table(const std::map<std::string, F1Report>& rows);

// "<out>.manifest.json" beside an output.
void WriteManifest(const std::filesystem::path& out, const std::string& command,
                   const RunConfig& cfg, const std::vector<std::filesystem::path>& inputs,
                   const std::map<std::string, std::string>& extra = {});

}  // namespace laug

#endif  // LAUG_PIPELINE_H_
