// laug/aug_sd.h

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

// Speech disfluency injection: filled pauses, repeats, restarts and repairs.
// Every operation only inserts text, never inside a slot-value span, and the
// DA is returned unchanged.

#ifndef LAUG_AUG_SD_H_
#define LAUG_AUG_SD_H_

#include <string>
#include <utility>
#include <vector>

#include "laug/augment.h"
#include "laug/resources.h"
#include "laug/rng.h"
#include "laug/textkit.h"

namespace laug {

// An interruption point is a token index; the disfluency goes right after
// that token. Punctuation tokens are never points. Each eligible token is
// drawn independently with dist.PointProbability(kind, position decile).
std::vector<std::size_t> SampleInterruptionPoints(const TokenSeq& toks,
                                                  const DisfluencyDistributions& dist,
                                                  Rng& rng);

// fillers[k] goes after token points[k].
AugmentationRecord InjectPauses(const Utterance& u, const SourceRef& src,
                                const std::vector<std::size_t>& points,
                                const std::vector<std::string>& fillers);
AugmentationRecord InjectPauses(const Utterance& u, const SourceRef& src,
                                const std::vector<std::size_t>& points,
                                const DisfluencyDistributions& dist, Rng& rng);

// (point, width): the `width` word tokens ending at the point are repeated
// after it, comma separated. A point on an atom is skipped; the width
// shrinks when an atom or punctuation is reached first.
AugmentationRecord InjectRepeats(const Utterance& u, const SourceRef& src,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& points);
AugmentationRecord InjectRepeats(const Utterance& u, const SourceRef& src,
                                 const std::vector<std::size_t>& points, Rng& rng);

// Prefixes "<term> ". Throws NoCandidateError on an empty utterance.
AugmentationRecord InjectRestart(const Utterance& u, const SourceRef& src,
                                 const std::string& term);
AugmentationRecord InjectRestart(const Utterance& u, const SourceRef& src,
                                 const DisfluencyDistributions& dist, Rng& rng);

// Inserts "<reparandum>, <edit term> " right before spans[span_index].
AugmentationRecord InjectRepair(const Utterance& u, const SourceRef& src,
                                std::size_t span_index, const std::string& reparandum,
                                const std::string& edit_term);
// Throws NoRepairableSlotError unless some span's slot-key has an ontology
// value other than its own.
AugmentationRecord InjectRepair(const Utterance& u, const SourceRef& src,
                                const Ontology& ontology, const DisfluencyDistributions& dist,
                                Rng& rng);

// One type drawn from dist.type_mix. A repair with nothing to repair becomes
// a pause. Pauses and repeats with no sampled point use one uniformly chosen
// eligible point so the output always differs from the input.
AugmentationRecord SdAugment(const Utterance& u, const SourceRef& src, const Ontology& ontology,
                             const DisfluencyDistributions& dist, Rng& rng);

}  // namespace laug

#endif  // LAUG_AUG_SD_H_
