// laug/aug_tp.h

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

// Text paraphrasing. A DA is flattened to text, e.g.
//
//   train * { inform ( dest = Cambridge ; arrive = 20:45 ) }
//
// where "*" marks a domain the user mentions for the first time. A generator
// turns that into candidate sentences; each candidate then has its slot
// values located, repaired to the original surface form, and is rejected if
// a value is missing or a foreign ontology value shows up.

#ifndef LAUG_AUG_TP_H_
#define LAUG_AUG_TP_H_

#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "laug/augment.h"
#include "laug/rng.h"

namespace laug {

struct SerializedDa {
  std::string text;
  std::set<std::string> starred;
};

// Domains alphabetical, intents alphabetical within a domain, slots in
// annotation order. Slot-less items of an intent form their own empty
// "intent ( )" group.
SerializedDa SerializeDa(std::span<const DialogActItem> da,
                         const std::set<std::string>& first_mention);

struct ParsedDa {
  std::vector<DialogActItem> items;
  std::set<std::string> starred;
};
// Throws ParseError on malformed input.
ParsedDa ParseSerializedDa(std::string_view text);

// Domains in turn `turn`'s DA that no earlier turn's DA mentions.
std::set<std::string> FirstMentionDomains(const Dialog& d, std::size_t turn);

struct ParaphraseRequest {
  SerializedDa da;
  std::vector<std::string> context;  // most recent last
  std::size_t k = 5;
};

class ParaphraseGenerator {
 public:
  virtual ~ParaphraseGenerator() = default;
  // At most req.k non-empty candidates. Throws GeneratorUnavailableError
  // when no answer can be obtained at all.
  virtual std::vector<std::string> Generate(const ParaphraseRequest& req, Rng& rng) = 0;
};

// Sentence templates per intent. Starred domains get full sentences that
// name the domain; unstarred ones get elliptical follow-ups.
class TemplateGenerator : public ParaphraseGenerator {
 public:
  std::vector<std::string> Generate(const ParaphraseRequest& req, Rng& rng) override;
};

// POSTs {"da", "context", "k"} as JSON to an HTTP endpoint and reads
// {"candidates": [...]} back.
class HttpParaphraseClient : public ParaphraseGenerator {
 public:
  explicit HttpParaphraseClient(std::string endpoint, double timeout_seconds = 30.0);
  std::vector<std::string> Generate(const ParaphraseRequest& req, Rng& rng) override;

 private:
  std::string endpoint_;
  double timeout_seconds_;
};

struct TpConfig {
  double detect_threshold = 0.9;
  std::size_t k = 5;
  std::size_t context_turns = 2;
  // Shorter ontology values are ignored by the redundancy filter.
  std::size_t min_redundant_length = 4;

  void Validate() const;
};

// Empty result means the candidate was rejected.
std::optional<AugmentationRecord> ValidateAndRepair(const std::string& candidate,
                                                    const Utterance& original,
                                                    const SourceRef& src,
                                                    const Ontology& ontology,
                                                    const TpConfig& cfg = {});

// First accepted candidate whose text differs from the original. Throws
// NoCandidateError for a turn with an empty DA.
std::optional<AugmentationRecord> TpAugment(const Dialog& d, std::size_t turn,
                                            ParaphraseGenerator& gen, const Ontology& ontology,
                                            const TpConfig& cfg, Rng& rng);

}  // namespace laug

#endif  // LAUG_AUG_TP_H_
