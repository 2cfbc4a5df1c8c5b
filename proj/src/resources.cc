// src/resources.cc

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

#include "laug/resources.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "laug/error.h"
#include "laug/utf8.h"

#ifndef LAUG_RESOURCE_DIR
#define LAUG_RESOURCE_DIR "resources"
#endif

namespace laug {

namespace {

std::vector<std::string> SplitWs(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream ss{std::string(s)};
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

std::vector<std::string> SplitOn(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t b = 0;
  while (true) {
    auto e = s.find(sep, b);
    out.push_back(utf8::Trim(s.substr(b, e == std::string_view::npos ? e : e - b)));
    if (e == std::string_view::npos) break;
    b = e + 1;
  }
  return out;
}

[[noreturn]] void LineError(std::string_view source, std::size_t line, const std::string& what) {
  throw ParseError(std::string(source) + ":" + std::to_string(line) + ": " + what);
}

double ParseWeight(std::string_view s, std::string_view source, std::size_t line) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    LineError(source, line, "bad number '" + std::string(s) + "'");
  return v;
}

bool SkipLine(const std::string& line) {
  auto t = utf8::Trim(line);
  return t.empty() || t[0] == '#';
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open resource '" + path.string() + "'");
  return in;
}

std::string JoinKey(const std::vector<std::string>& ph, std::size_t skip) {
  std::string key;
  for (std::size_t i = 0; i < ph.size(); ++i) {
    if (i == skip) continue;
    key += ph[i];
    key += ' ';
  }
  return key;
}

std::size_t PhonemeDistance(const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] != b[j - 1])});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

// --- PronunciationLexicon ------------------------------------------------

PronunciationLexicon::PronunciationLexicon(std::vector<std::string> inventory)
    : inventory_(std::move(inventory)),
      inventory_set_(inventory_.begin(), inventory_.end()) {}

bool PronunciationLexicon::InInventory(std::string_view symbol) const {
  return inventory_set_.count(std::string(symbol)) > 0;
}

void PronunciationLexicon::Add(std::string_view word, PhonemeSeq pron) {
  for (const auto& p : pron.phonemes)
    if (!InInventory(p))
      throw ValidationError("phoneme '" + p + "' of '" + std::string(word) +
                            "' is not in the lexicon inventory");
  std::string w = utf8::ToLower(word);
  if (entries_.count(w) || pron.phonemes.empty()) return;
  const std::size_t idx = words_.size();
  words_.push_back(w);
  deletion_index_[JoinKey(pron.phonemes, SIZE_MAX)].push_back(idx);
  for (std::size_t k = 0; k < pron.phonemes.size(); ++k)
    deletion_index_[JoinKey(pron.phonemes, k)].push_back(idx);
  entries_.emplace(std::move(w), std::move(pron));
}

const PhonemeSeq* PronunciationLexicon::Find(std::string_view lower_word) const {
  auto it = entries_.find(std::string(lower_word));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> PronunciationLexicon::Neighbors(const PhonemeSeq& pron,
                                                         std::string_view exclude) const {
  std::set<std::size_t> cand;
  auto probe = [&](const std::string& key) {
    if (auto it = deletion_index_.find(key); it != deletion_index_.end())
      cand.insert(it->second.begin(), it->second.end());
  };
  probe(JoinKey(pron.phonemes, SIZE_MAX));
  for (std::size_t k = 0; k < pron.phonemes.size(); ++k) probe(JoinKey(pron.phonemes, k));
  std::vector<std::string> out;
  for (auto idx : cand) {
    const auto& w = words_[idx];
    if (w == exclude) continue;
    if (PhonemeDistance(entries_.at(w).phonemes, pron.phonemes) <= 1) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PronunciationLexicon PronunciationLexicon::Parse(std::istream& in, std::string_view source) {
  PronunciationLexicon lex;
  bool have_inventory = false;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto t = utf8::Trim(line);
    if (t.empty()) continue;
    if (t.rfind(";;;", 0) == 0) {
      auto body = utf8::Trim(t.substr(3));
      const std::string tag = "inventory:";
      if (body.rfind(tag, 0) == 0) {
        lex = PronunciationLexicon(SplitWs(body.substr(tag.size())));
        have_inventory = true;
      }
      continue;
    }
    if (!have_inventory) LineError(source, n, "entry before the inventory header");
    auto fields = SplitWs(t);
    if (fields.size() < 2) LineError(source, n, "entry needs a word and phonemes");
    std::string word = fields[0];
    if (auto paren = word.find('('); paren != std::string::npos && paren > 0) {
      continue;  // alternate pronunciation
    }
    PhonemeSeq pron{{fields.begin() + 1, fields.end()}};
    try {
      lex.Add(word, std::move(pron));
    } catch (const ValidationError& e) {
      LineError(source, n, e.what());
    }
  }
  if (!have_inventory) throw ParseError(std::string(source) + ": missing inventory header");
  return lex;
}

PronunciationLexicon PronunciationLexicon::Load(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return Parse(in, path.string());
}

// --- Thesaurus -------------------------------------------------------------

void Thesaurus::Add(std::string_view word, std::vector<std::string> synonyms) {
  std::string w = utf8::ToLower(utf8::Trim(word));
  auto& list = entries_[w];
  for (auto& s : synonyms) {
    auto lower = utf8::ToLower(utf8::Trim(s));
    if (lower.empty() || lower == w) continue;
    if (std::find(list.begin(), list.end(), lower) == list.end()) list.push_back(lower);
  }
  if (list.empty()) entries_.erase(w);
}

const std::vector<std::string>* Thesaurus::Find(std::string_view lower_word) const {
  auto it = entries_.find(std::string(lower_word));
  return it == entries_.end() ? nullptr : &it->second;
}

Thesaurus Thesaurus::Parse(std::istream& in, std::string_view source) {
  Thesaurus th;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (SkipLine(line)) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) LineError(source, n, "expected 'word: syn1, syn2'");
    th.Add(line.substr(0, colon), SplitOn(std::string_view(line).substr(colon + 1), ','));
  }
  return th;
}

Thesaurus Thesaurus::Load(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return Parse(in, path.string());
}

StopwordSet ParseStopwords(std::istream& in) {
  StopwordSet s;
  std::string line;
  while (std::getline(in, line)) {
    if (SkipLine(line)) continue;
    s.insert(utf8::ToLower(utf8::Trim(line)));
  }
  return s;
}

StopwordSet LoadStopwords(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return ParseStopwords(in);
}

// --- UnseenValuePool -------------------------------------------------------

UnseenValuePool UnseenValuePool::Parse(std::istream& in, std::string_view source) {
  UnseenValuePool pool;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (SkipLine(line)) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) LineError(source, n, "expected 'domain-slot: v1 | v2'");
    auto key = utf8::ToLower(utf8::Trim(line.substr(0, colon)));
    if (key.find('-') == std::string::npos) LineError(source, n, "slot key must be domain-slot");
    auto& vals = pool.values[key];
    for (auto& v : SplitOn(std::string_view(line).substr(colon + 1), '|'))
      if (!v.empty()) vals.push_back(v);
  }
  return pool;
}

UnseenValuePool UnseenValuePool::Load(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return Parse(in, path.string());
}

std::vector<std::string> UnseenValuePool::RestrictTo(const Ontology& training) {
  std::vector<std::string> removed;
  for (auto& [key, vals] : values) {
    auto it = training.find(key);
    if (it == training.end()) continue;
    std::set<std::string> seen;
    for (const auto& v : it->second) seen.insert(utf8::Canonical(v));
    std::erase_if(vals, [&](const std::string& v) {
      if (!seen.count(utf8::Canonical(v))) return false;
      removed.push_back(key + ": " + v);
      return true;
    });
  }
  std::erase_if(values, [](const auto& kv) { return kv.second.empty(); });
  return removed;
}

// --- ConfusionTable --------------------------------------------------------

ConfusionTable ConfusionTable::Parse(std::istream& in, std::string_view source) {
  ConfusionTable table;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (SkipLine(line)) continue;
    auto arrow = line.find("=>");
    if (arrow == std::string::npos) LineError(source, n, "expected '=>'");
    auto lhs = utf8::ToLower(utf8::Trim(line.substr(0, arrow)));
    auto rhs = utf8::Trim(line.substr(arrow + 2));
    if (lhs.empty() || rhs.empty()) LineError(source, n, "empty side of '=>'");
    if (auto plus = lhs.find('+'); plus != std::string::npos) {
      auto w1 = utf8::Trim(lhs.substr(0, plus));
      auto w2 = utf8::Trim(lhs.substr(plus + 1));
      if (w1.empty() || w2.empty()) LineError(source, n, "liaison needs 'w1 + w2'");
      table.liaison[{w1, w2}] = utf8::ToLower(rhs);
      continue;
    }
    auto& cands = table.similar[lhs];
    for (auto& part : SplitOn(rhs, ',')) {
      if (part.empty()) continue;
      Candidate c;
      if (auto colon = part.rfind(':'); colon != std::string::npos) {
        c.word = utf8::ToLower(utf8::Trim(part.substr(0, colon)));
        c.weight = ParseWeight(utf8::Trim(part.substr(colon + 1)), source, n);
      } else {
        c.word = utf8::ToLower(part);
      }
      if (c.word == lhs) LineError(source, n, "confusable equals its key");
      if (!(c.weight > 0)) LineError(source, n, "weights must be positive");
      cands.push_back(std::move(c));
    }
  }
  return table;
}

ConfusionTable ConfusionTable::Load(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return Parse(in, path.string());
}

// --- DisfluencyDistributions -----------------------------------------------

std::string_view DisfluencyName(DisfluencyType t) {
  switch (t) {
    case DisfluencyType::kPause: return "pause";
    case DisfluencyType::kRepeat: return "repeat";
    case DisfluencyType::kRestart: return "restart";
    case DisfluencyType::kRepair: return "repair";
  }
  return "pause";
}

double DisfluencyDistributions::PointProbability(std::string_view kind,
                                                 std::size_t decile) const {
  const std::string d = std::to_string(std::min<std::size_t>(decile, 9));
  const std::string k(kind);
  for (const std::string& key : {k + "@" + d, k + "@*", "*@" + d}) {
    if (auto it = point_table.find(key); it != point_table.end()) return it->second;
  }
  return default_point;
}

DisfluencyDistributions DisfluencyDistributions::Parse(std::istream& in,
                                                       std::string_view source) {
  DisfluencyDistributions dist;
  dist.fillers.clear();
  dist.edit_terms.clear();
  dist.restart_terms.clear();
  std::string section;
  std::string line;
  std::size_t n = 0;
  bool mix_seen = false;
  while (std::getline(in, line)) {
    ++n;
    if (SkipLine(line)) continue;
    auto t = utf8::Trim(line);
    if (t.front() == '[') {
      if (t.back() != ']') LineError(source, n, "unterminated section header");
      section = t.substr(1, t.size() - 2);
      continue;
    }
    auto sp = t.find_last_of(" \t");
    if (sp == std::string::npos) LineError(source, n, "expected 'item weight'");
    auto item = utf8::Trim(t.substr(0, sp));
    double w = ParseWeight(utf8::Trim(t.substr(sp + 1)), source, n);
    if (w < 0) LineError(source, n, "negative weight");
    if (section == "fillers") {
      dist.fillers.push_back({item, w});
    } else if (section == "edit_terms") {
      dist.edit_terms.push_back({item, w});
    } else if (section == "restart_terms") {
      dist.restart_terms.push_back({item, w});
    } else if (section == "points") {
      if (w > 1) LineError(source, n, "probability above 1");
      if (item == "default")
        dist.default_point = w;
      else
        dist.point_table[item] = w;
    } else if (section == "type_mix") {
      if (!mix_seen) dist.type_mix.assign(4, 0.0);
      mix_seen = true;
      static const char* kNames[] = {"pause", "repeat", "restart", "repair"};
      auto pos = std::find(std::begin(kNames), std::end(kNames), item);
      if (pos == std::end(kNames)) LineError(source, n, "unknown disfluency type '" + item + "'");
      dist.type_mix[pos - std::begin(kNames)] = w;
    } else {
      LineError(source, n, "line outside a known section");
    }
  }
  auto require = [&](const std::vector<WeightedTerm>& v, const char* name) {
    bool positive = std::any_of(v.begin(), v.end(), [](const auto& x) { return x.weight > 0; });
    if (v.empty() || !positive)
      throw ParseError(std::string(source) + ": section [" + name + "] needs a positive weight");
  };
  require(dist.fillers, "fillers");
  require(dist.edit_terms, "edit_terms");
  require(dist.restart_terms, "restart_terms");
  if (std::none_of(dist.type_mix.begin(), dist.type_mix.end(), [](double w) { return w > 0; }))
    throw ParseError(std::string(source) + ": [type_mix] needs a positive weight");
  return dist;
}

DisfluencyDistributions DisfluencyDistributions::Load(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return Parse(in, path.string());
}

// --- Bundle ----------------------------------------------------------------

ResourceBundle ResourceBundle::LoadDir(const std::filesystem::path& dir) {
  ResourceBundle b;
  b.lexicon = PronunciationLexicon::Load(dir / "lexicon.txt");
  b.thesaurus = Thesaurus::Load(dir / "thesaurus.txt");
  b.stopwords = LoadStopwords(dir / "stopwords.txt");
  b.unseen_values = UnseenValuePool::Load(dir / "unseen_values.txt");
  b.confusion = ConfusionTable::Load(dir / "confusion.txt");
  b.disfluency = DisfluencyDistributions::Load(dir / "disfluency.txt");
  return b;
}

std::filesystem::path DefaultResourceDir() {
  if (const char* env = std::getenv("LAUG_RESOURCES"); env && *env) return env;
  return LAUG_RESOURCE_DIR;
}

}  // namespace laug
