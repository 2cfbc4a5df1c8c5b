// src/evalkit.cc

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

#include "laug/evalkit.h"

#include <set>
#include <stdexcept>

#include "laug/error.h"
#include "laug/textkit.h"
#include "laug/utf8.h"

namespace laug {

F1Report OverallF1(std::span<const DaSet> predicted, std::span<const DaSet> gold) {
  if (predicted.size() != gold.size())
    throw std::invalid_argument("overall F1: " + std::to_string(predicted.size()) +
                                " predictions for " + std::to_string(gold.size()) + " gold sets");
  F1Report r;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    std::set<std::string> p, g;
    for (const auto& item : predicted[i]) p.insert(CanonicalKey(item));
    for (const auto& item : gold[i]) g.insert(CanonicalKey(item));
    std::size_t hit = 0;
    for (const auto& k : p) hit += g.count(k);
    r.true_positives += hit;
    r.false_positives += p.size() - hit;
    r.false_negatives += g.size() - hit;
  }
  const double tp = static_cast<double>(r.true_positives);
  if (r.true_positives + r.false_positives > 0)
    r.precision = tp / static_cast<double>(r.true_positives + r.false_positives);
  if (r.true_positives + r.false_negatives > 0)
    r.recall = tp / static_cast<double>(r.true_positives + r.false_negatives);
  r.f1 = r.precision + r.recall > 0
             ? 2 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  return r;
}

namespace {

std::vector<std::string> WordSeq(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& t : Tokenize(text)) out.push_back(t.surface);
  return out;
}

double Normalized(std::size_t dist, std::size_t a, std::size_t b) {
  const std::size_t m = std::max(a, b);
  return m == 0 ? 0.0 : static_cast<double>(dist) / static_cast<double>(m);
}

}  // namespace

ChangeRateReport ChangeRates(const Corpus& orig, std::span<const AugmentationRecord> aug) {
  ChangeRateReport r;
  double char_sum = 0, word_sum = 0;
  for (const auto& rec : aug) {
    const Dialog* d = orig.Find(rec.source.dialog_id);
    if (!d || rec.source.turn >= d->turns.size())
      throw ValidationError("record source " + rec.source.dialog_id + " turn " +
                            std::to_string(rec.source.turn) + " is not in the original corpus");
    const Utterance& u = d->turns[rec.source.turn];
    const auto a = utf8::Decode(u.text), b = utf8::Decode(rec.text);
    char_sum += Normalized(EditDistance(a, b), a.size(), b.size());
    const auto wa = WordSeq(u.text), wb = WordSeq(rec.text);
    word_sum += Normalized(EditDistance(wa, wb), wa.size(), wb.size());

    std::set<std::string> kept;
    for (const auto& item : rec.da) kept.insert(CanonicalKey(item));
    for (const auto& item : u.da) {
      if (!item.HasValue()) continue;
      ++r.value_fields;
      if (!kept.count(CanonicalKey(item))) ++r.changed_fields;
    }
  }
  r.records = aug.size();
  if (r.records) {
    r.char_rate = char_sum / static_cast<double>(r.records);
    r.word_rate = word_sum / static_cast<double>(r.records);
  }
  if (r.value_fields)
    r.slot_rate = static_cast<double>(r.changed_fields) / static_cast<double>(r.value_fields);
  return r;
}

// --- LexiconLu -------------------------------------------------------------

namespace {

std::string JoinTokens(const std::string& text) {
  std::string out;
  for (const auto& t : Tokenize(utf8::Canonical(text))) {
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

template <typename K>
const K& ArgMax(const std::map<K, std::size_t>& counts) {
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it)
    if (it->second > best->second) best = it;
  return best->first;
}

constexpr std::size_t kMinKeywordCount = 2;
constexpr double kMinKeywordPrecision = 0.6;

}  // namespace

LexiconLu LexiconLu::Train(const Corpus& c) {
  std::map<std::string, std::map<std::string, std::size_t>> value_counts;
  std::map<std::string, DialogActItem> label_item;
  std::map<std::string, std::size_t> df;
  std::map<std::string, std::map<std::string, std::size_t>> co;

  std::size_t turns = 0;
  for (const auto& d : c.dialogs) {
    if (d.split != Split::kTrain || d.quarantined) continue;
    for (const auto& u : d.turns) {
      if (u.speaker != Speaker::kUser) continue;
      ++turns;
      for (const auto& sp : u.spans) {
        DialogActItem key = u.da[sp.item];
        key.value.clear();
        const std::string k = CanonicalKey(key);
        label_item.emplace(k, key);
        ++value_counts[JoinTokens(u.da[sp.item].value)][k];
      }
      std::set<std::string> labels;
      for (auto item : u.da) {
        if (item.HasValue()) continue;
        if (!item.IsRequest()) item.value.clear();
        const std::string k = CanonicalKey(item);
        label_item.emplace(k, item);
        labels.insert(k);
      }
      std::set<std::string> words;
      for (const auto& t : TokenizeWithSpans(u.text, u.spans))
        if (t.kind == TokenKind::kWord && utf8::Length(t.surface) >= 3)
          words.insert(utf8::ToLower(t.surface));
      for (const auto& w : words) {
        ++df[w];
        for (const auto& l : labels) ++co[w][l];
      }
    }
  }
  if (turns == 0) throw ValidationError("lexicon LU: training split has no user turns");

  LexiconLu lu;
  for (const auto& [value, counts] : value_counts) {
    if (value.empty()) continue;
    lu.value_map_[value] = label_item.at(ArgMax(counts));
    lu.longest_value_ = std::max(lu.longest_value_, WordSeq(value).size());
  }
  for (const auto& [word, counts] : co) {
    const std::string& label = ArgMax(counts);
    const std::size_t n = counts.at(label);
    if (n >= kMinKeywordCount &&
        static_cast<double>(n) >= kMinKeywordPrecision * static_cast<double>(df.at(word)))
      lu.keyword_map_[word] = label_item.at(label);
  }
  return lu;
}

DaSet LexiconLu::PredictText(const std::string& text) const {
  const TokenSeq toks = Tokenize(text);
  std::vector<std::string> lower;
  for (const auto& t : toks) lower.push_back(utf8::ToLower(t.surface));

  DaSet out;
  std::set<std::string> seen;
  auto emit = [&](DialogActItem item) {
    if (seen.insert(CanonicalKey(item)).second) out.push_back(std::move(item));
  };

  std::size_t i = 0;
  while (i < toks.size()) {
    std::size_t matched = 0;
    for (std::size_t len = std::min(longest_value_, toks.size() - i); len > 0 && !matched; --len) {
      std::string key;
      for (std::size_t k = i; k < i + len; ++k) key += (k > i ? " " : "") + lower[k];
      auto it = value_map_.find(key);
      if (it == value_map_.end()) continue;
      DialogActItem item = it->second;
      item.value = utf8::Substr(text, toks[i].start, toks[i + len - 1].end);
      emit(std::move(item));
      matched = len;
    }
    i += matched ? matched : 1;
  }
  for (const auto& w : lower) {
    auto it = keyword_map_.find(w);
    if (it != keyword_map_.end()) emit(it->second);
  }
  return out;
}

DaSet LexiconLu::Predict(const LuExample& ex) const {
  if (ex.context.empty()) return {};
  return PredictText(ex.context.back().text);
}

}  // namespace laug
