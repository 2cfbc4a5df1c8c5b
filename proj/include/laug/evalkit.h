// laug/evalkit.h

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

// Scoring: micro-averaged DA F1, change rates between original and augmented
// utterances, and a small lexicon-matching LU model used as a baseline.

#ifndef LAUG_EVALKIT_H_
#define LAUG_EVALKIT_H_

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "laug/augment.h"
#include "laug/corpus.h"

namespace laug {

struct F1Report {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
};

using DaSet = std::vector<DialogActItem>;

// Items match on CanonicalKey; duplicates within one set count once.
// Precision is 1 with no predictions, recall is 1 with no gold items.
// Throws std::invalid_argument when the lists differ in length.
F1Report OverallF1(std::span<const DaSet> predicted, std::span<const DaSet> gold);

struct ChangeRateReport {
  double char_rate = 0;
  double word_rate = 0;
  double slot_rate = 0;
  std::size_t records = 0;
  std::size_t value_fields = 0;
  std::size_t changed_fields = 0;
};

// Levenshtein distance between two sequences.
template <typename Seq>
std::size_t EditDistance(const Seq& a, const Seq& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// char_rate and word_rate are per-record means of edit distance over the
// longer length; slot_rate pools value fields over all records. Throws
// ValidationError when a record's source is not in `orig`.
ChangeRateReport ChangeRates(const Corpus& orig, std::span<const AugmentationRecord> aug);

class LexiconLu {
 public:
  // Built from the non-quarantined training dialogs only.
  static LexiconLu Train(const Corpus& c);

  // Looks only at the last utterance of the example.
  DaSet Predict(const LuExample& ex) const;
  DaSet PredictText(const std::string& text) const;

  std::size_t value_count() const { return value_map_.size(); }
  std::size_t keyword_count() const { return keyword_map_.size(); }

 private:
  // Canonical value, tokens joined by one space -> (domain, intent, slot).
  std::map<std::string, DialogActItem> value_map_;
  std::size_t longest_value_ = 0;
  // Keyword -> slot-less or request item.
  std::map<std::string, DialogActItem> keyword_map_;
};

}  // namespace laug

#endif  // LAUG_EVALKIT_H_
