// laug/aug_sr.h

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

// Simulated speech recognition channel. Text goes through spoken-number
// expansion, liaison merges and similar-sound substitutions, then comes out
// lowercased without punctuation. Slot values are looked up again in the
// noisy text afterwards; values that cannot be found are dropped with their
// DA items.

#ifndef LAUG_AUG_SR_H_
#define LAUG_AUG_SR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laug/augment.h"
#include "laug/resources.h"
#include "laug/rng.h"

namespace laug {

struct SrConfig {
  double p_confuse = 0.08;
  double p_liaison = 0.05;
  double redetect_threshold = 0.7;
  bool strip_case_punct = true;

  void Validate() const;
};

struct AsrOutput {
  std::string text;
  std::vector<std::string> trace;  // one line per edit
};

AsrOutput SimulateAsr(const Utterance& u, const SrConfig& cfg, const ConfusionTable& table,
                      const PronunciationLexicon& lex, Rng& rng);

// Rough letter-to-phoneme guess for words missing from the lexicon.
PhonemeSeq ApproximatePhonemes(std::string_view word);

// Weighted substitution candidates for a word: table entries when present,
// otherwise lexicon words one phoneme away (weight 1 each).
std::vector<ConfusionTable::Candidate> SoundAlikes(std::string_view word,
                                                   const ConfusionTable& table,
                                                   const PronunciationLexicon& lex);

// Liaison result for an adjacent pair, if the pair is a liaison candidate.
std::optional<std::string> LiaisonMerge(std::string_view w1, std::string_view w2,
                                        const ConfusionTable& table,
                                        const PronunciationLexicon& lex);

// Relocates every spanned value of `original` in `noisy`. Found values take
// the noisy window text as their new value; the rest are dropped. `trace` is
// copied into the record notes.
AugmentationRecord RedetectValues(const std::string& noisy, const Utterance& original,
                                  const SourceRef& src, const SrConfig& cfg,
                                  const std::vector<std::string>& trace = {});

AugmentationRecord SrAugment(const Utterance& u, const SourceRef& src, const SrConfig& cfg,
                             const ConfusionTable& table, const PronunciationLexicon& lex,
                             Rng& rng);

}  // namespace laug

#endif  // LAUG_AUG_SR_H_
