// laug/resources.h

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

// Plain-text resource files consumed by the augmenters and their parsers.
//
//   lexicon.txt      ";;; inventory: AA AE ..." header, then "WORD PH1 PH2 ..."
//   thesaurus.txt    "word: syn1, syn2, ..."
//   stopwords.txt    one word per line
//   unseen_values.txt "domain-slot: value1 | value2 | ..."
//   confusion.txt    "word => cand1:w1, cand2:w2" and "w1 + w2 => merged"
//   disfluency.txt   [fillers] [edit_terms] [restart_terms] [points] [type_mix]
//                    sections of "item weight" lines
//
// Lines starting with '#' are comments everywhere except the lexicon, which
// uses ';;;' in the CMUdict tradition.

#ifndef LAUG_RESOURCES_H_
#define LAUG_RESOURCES_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "laug/corpus.h"

namespace laug {

struct PhonemeSeq {
  std::vector<std::string> phonemes;
  friend bool operator==(const PhonemeSeq&, const PhonemeSeq&) = default;
};

class PronunciationLexicon {
 public:
  PronunciationLexicon() = default;
  explicit PronunciationLexicon(std::vector<std::string> inventory);

  static PronunciationLexicon Parse(std::istream& in, std::string_view source = "lexicon");
  static PronunciationLexicon Load(const std::filesystem::path& path);

  // Symbols must belong to the inventory; the first pronunciation of a word
  // wins.
  void Add(std::string_view word, PhonemeSeq pron);

  // Lookup of an already-lowercased word.
  const PhonemeSeq* Find(std::string_view lower_word) const;

  const std::vector<std::string>& inventory() const { return inventory_; }
  bool InInventory(std::string_view symbol) const;
  std::size_t size() const { return words_.size(); }

  // Lexicon words (other than `exclude`) whose pronunciation is within one
  // phoneme insertion, deletion or substitution of `pron`. Sorted.
  std::vector<std::string> Neighbors(const PhonemeSeq& pron,
                                     std::string_view exclude = {}) const;

 private:
  std::vector<std::string> inventory_;
  std::unordered_set<std::string> inventory_set_;
  std::unordered_map<std::string, PhonemeSeq> entries_;
  std::vector<std::string> words_;
  // Keys are the pronunciation and each single-deletion variant of it; two
  // pronunciations within edit distance one always share a key.
  std::unordered_map<std::string, std::vector<std::size_t>> deletion_index_;
};

class Thesaurus {
 public:
  static Thesaurus Parse(std::istream& in, std::string_view source = "thesaurus");
  static Thesaurus Load(const std::filesystem::path& path);

  void Add(std::string_view word, std::vector<std::string> synonyms);
  // Synonyms of a lowercased word, never including the word itself.
  const std::vector<std::string>* Find(std::string_view lower_word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

using StopwordSet = std::unordered_set<std::string>;
StopwordSet ParseStopwords(std::istream& in);
StopwordSet LoadStopwords(const std::filesystem::path& path);

// slot-key -> replacement values that never occur in training data.
struct UnseenValuePool {
  std::map<std::string, std::vector<std::string>> values;

  static UnseenValuePool Parse(std::istream& in, std::string_view source = "pool");
  static UnseenValuePool Load(const std::filesystem::path& path);

  // Removes every value that also appears (canonically) in `training` for the
  // same slot-key. Returns the removed "key: value" entries.
  std::vector<std::string> RestrictTo(const Ontology& training);
};

struct ConfusionTable {
  struct Candidate {
    std::string word;
    double weight = 1.0;
  };
  std::map<std::string, std::vector<Candidate>> similar;
  std::map<std::pair<std::string, std::string>, std::string> liaison;

  static ConfusionTable Parse(std::istream& in, std::string_view source = "confusion");
  static ConfusionTable Load(const std::filesystem::path& path);
};

enum class DisfluencyType { kPause, kRepeat, kRestart, kRepair };
std::string_view DisfluencyName(DisfluencyType t);

struct WeightedTerm {
  std::string term;
  double weight = 1.0;
};

struct DisfluencyDistributions {
  std::vector<WeightedTerm> fillers;
  std::vector<WeightedTerm> edit_terms;
  std::vector<WeightedTerm> restart_terms;
  // Gap probabilities keyed "kind@decile", where kind is word/atom/punct/* and
  // decile is 0-9 or *. Lookup falls back to default_point.
  std::map<std::string, double> point_table;
  double default_point = 0.06;
  // Indexed by DisfluencyType.
  std::vector<double> type_mix = {1, 1, 1, 1};

  static DisfluencyDistributions Parse(std::istream& in, std::string_view source = "disfluency");
  static DisfluencyDistributions Load(const std::filesystem::path& path);

  double PointProbability(std::string_view kind, std::size_t decile) const;
};

struct ResourceBundle {
  PronunciationLexicon lexicon;
  Thesaurus thesaurus;
  StopwordSet stopwords;
  UnseenValuePool unseen_values;
  ConfusionTable confusion;
  DisfluencyDistributions disfluency;

  // Loads the six standard files from a directory.
  static ResourceBundle LoadDir(const std::filesystem::path& dir);
};

// Directory of the resources shipped with the toolkit.
std::filesystem::path DefaultResourceDir();

}  // namespace laug

#endif  // LAUG_RESOURCES_H_
