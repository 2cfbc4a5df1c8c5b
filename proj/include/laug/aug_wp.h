// laug/aug_wp.h

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

// Word perturbation: slot-aware EDA (synonym replacement, random insertion,
// random swap, random deletion) plus slot value replacement.
//
// Slot-value atoms are never selected, moved, split or deleted by the EDA
// operations, so their DA is returned unchanged. Slot value replacement is
// the one operation that rewrites a value, in the text and in the DA.

#ifndef LAUG_AUG_WP_H_
#define LAUG_AUG_WP_H_

#include <string>
#include <utility>
#include <vector>

#include "laug/augment.h"
#include "laug/resources.h"
#include "laug/rng.h"
#include "laug/textkit.h"

namespace laug {

struct WpConfig {
  double alpha = 0.1;  // edits per word
  double p_svr = 0.2;  // chance of slot value replacement over an EDA op
  StopwordSet stopwords;

  void Validate() const;  // throws ValidationError naming the field
};

enum class EdaOp { kSynonym, kInsert, kSwap, kDelete };
std::string_view EdaOpName(EdaOp op);

// max(1, round(alpha * word_count)).
std::size_t EditBudget(std::size_t word_count, double alpha);

// Fully determined EDA edit. Token indices refer to the TokenSeq of the
// source utterance; only kWord tokens may be named.
struct EdaPlan {
  EdaOp op = EdaOp::kSwap;
  std::vector<std::pair<std::size_t, std::string>> replacements;  // synonym
  // Insert word before token i; i == token count appends at the end.
  std::vector<std::pair<std::size_t, std::string>> insertions;
  std::vector<std::pair<std::size_t, std::size_t>> swaps;  // applied in order
  std::vector<std::size_t> deletions;
};

// Applies a plan; throws std::invalid_argument if it names a non-word token.
AugmentationRecord ApplyEdaPlan(const Utterance& u, const SourceRef& src, const EdaPlan& plan);

// Draws a plan for `op`. Throws NoCandidateError when the utterance has no
// eligible word (or, for deletion, only one word, which is never removed).
EdaPlan SampleEdaPlan(const TokenSeq& toks, EdaOp op, const Thesaurus& thesaurus,
                      const WpConfig& cfg, Rng& rng);

AugmentationRecord EdaPerturb(const Utterance& u, const SourceRef& src, EdaOp op,
                              const Thesaurus& thesaurus, const WpConfig& cfg, Rng& rng);

// Rewrites the value under spans[span_index] (and any other span of the same
// item) to `new_value`, updating the DA item identically.
AugmentationRecord ReplaceSlotValue(const Utterance& u, const SourceRef& src,
                                    std::size_t span_index, const std::string& new_value);

// Uniform span among those with a pool entry, then a uniform pool value.
// Throws NoSlotError when no span qualifies.
AugmentationRecord SlotValueReplace(const Utterance& u, const SourceRef& src,
                                    const UnseenValuePool& pool, Rng& rng);

// SVR with probability p_svr, otherwise one uniformly chosen EDA op. A
// failing choice falls back to the remaining operations in random order.
AugmentationRecord WpAugment(const Utterance& u, const SourceRef& src, const WpConfig& cfg,
                             const Thesaurus& thesaurus, const UnseenValuePool& pool, Rng& rng);

}  // namespace laug

#endif  // LAUG_AUG_WP_H_
