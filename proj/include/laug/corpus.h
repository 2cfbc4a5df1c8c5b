// laug/corpus.h

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

// Annotated dialog corpora: data model, native JSON format, validation and
// extraction of context-windowed language-understanding examples.

#ifndef LAUG_CORPUS_H_
#define LAUG_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace laug {

enum class Speaker { kUser, kSystem };
enum class Split { kTrain, kValidation, kTest };

std::string_view SpeakerName(Speaker s);
std::string_view SplitName(Split s);
std::optional<Speaker> ParseSpeaker(std::string_view s);
std::optional<Split> ParseSplit(std::string_view s);

// One (domain, intent, slot, value) tuple. value "?" marks a requested slot;
// slot is empty for slot-less intents such as thank/bye.
struct DialogActItem {
  std::string domain;
  std::string intent;
  std::string slot;
  std::string value;

  bool IsRequest() const { return value == "?"; }
  // True when the item carries a literal value that can be realized in text.
  bool HasValue() const { return !slot.empty() && value != "?"; }
  // "domain-slot", the ontology key.
  std::string SlotKey() const { return domain + "-" + slot; }

  // Field-wise after lowercasing and whitespace normalization.
  friend bool operator==(const DialogActItem& a, const DialogActItem& b);
};

// Canonical string for hashing/sorting: "domain|intent|slot|value", each
// field canonicalized.
std::string CanonicalKey(const DialogActItem& item);

// Order-insensitive comparison of DA lists (duplicates collapse).
bool SameDaSet(std::span<const DialogActItem> a, std::span<const DialogActItem> b);

struct SpanAnnotation {
  std::size_t item = 0;   // index into Utterance::da
  std::size_t start = 0;  // code-point offset, inclusive
  std::size_t end = 0;    // code-point offset, exclusive

  friend bool operator==(const SpanAnnotation&, const SpanAnnotation&) = default;
};

struct Utterance {
  Speaker speaker = Speaker::kUser;
  std::string text;
  std::vector<DialogActItem> da;
  std::vector<SpanAnnotation> spans;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

struct ContextTurn {
  Speaker speaker = Speaker::kUser;
  std::string text;

  friend bool operator==(const ContextTurn&, const ContextTurn&) = default;
};

// Present on single-turn dialogs that package one augmented utterance. The
// context holds every utterance that preceded the source turn.
struct AugmentMeta {
  std::string method;
  std::string source_dialog;
  std::size_t source_turn = 0;
  std::vector<ContextTurn> context;
  std::vector<std::string> notes;

  friend bool operator==(const AugmentMeta&, const AugmentMeta&) = default;
};

struct Dialog {
  std::string id;
  Split split = Split::kTrain;
  std::vector<Utterance> turns;
  std::optional<AugmentMeta> augment;
  // Set at load time when any turn violates an invariant. Quarantined
  // dialogs are kept but never augmented.
  bool quarantined = false;

  friend bool operator==(const Dialog&, const Dialog&) = default;
};

struct LoadIssue {
  std::string dialog_id;
  std::optional<std::size_t> turn;
  std::string message;

  std::string ToString() const;
  friend bool operator==(const LoadIssue&, const LoadIssue&) = default;
};

// slot-key -> known values, in first-seen order.
using Ontology = std::map<std::string, std::vector<std::string>>;

struct Corpus {
  std::vector<Dialog> dialogs;
  Ontology ontology;
  std::vector<LoadIssue> issues;

  const Dialog* Find(std::string_view id) const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

struct LuExample {
  std::vector<ContextTurn> context;  // ends with the current user turn
  std::vector<DialogActItem> gold;
  std::string dialog_id;
  std::size_t turn = 0;
};

struct LoadOptions {
  // Throw ValidationError on the first invariant violation instead of
  // quarantining the dialog.
  bool strict = false;
};

// Invariant checks for one dialog; an empty result means the dialog is clean.
std::vector<LoadIssue> ValidateDialog(const Dialog& d);

// Checks one utterance in isolation (DA items, spans). Used for augmented
// output as well as loaded turns.
std::vector<std::string> ValidateUtterance(const Utterance& u);

Corpus ParseCorpus(std::string_view json_text, const LoadOptions& opts = {});
Corpus LoadCorpus(const std::filesystem::path& path, const LoadOptions& opts = {});

// Serialized form has fixed key ordering; equal corpora produce equal bytes.
std::string SerializeCorpus(const Corpus& c);
// Written to a temporary sibling and renamed into place.
void SaveCorpus(const Corpus& c, const std::filesystem::path& path);

// Re-runs validation, recomputes quarantine flags and issues, and merges
// every annotated value into the ontology.
void Finalize(Corpus& c, const LoadOptions& opts = {});

// Values seen for a slot-key in the given split only.
Ontology SplitOntology(const Corpus& c, Split split);

// One example per user turn. m preceding utterances (fewer at dialog start)
// plus the turn itself. Packaged augmented dialogs draw their history from
// AugmentMeta::context.
std::vector<LuExample> ExtractLuExamples(const Corpus& c, std::size_t m,
                                         std::optional<Split> split = {});

// Writes bytes to path via a temporary file and rename.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view bytes);
std::string ReadFile(const std::filesystem::path& path);

// MultiWOZ 2.x adapter. `data_json` is the dialog map (id -> {"log": [...]})
// with per-turn "dialog_act" and "span_info"; dialogs listed in
// `test_ids` / `val_ids` get those splits, everything else is train.
Corpus ImportMultiWoz(std::string_view data_json,
                      std::span<const std::string> val_ids = {},
                      std::span<const std::string> test_ids = {});

}  // namespace laug

#endif  // LAUG_CORPUS_H_
