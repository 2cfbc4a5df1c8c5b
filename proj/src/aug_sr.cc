// src/aug_sr.cc

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

#include "laug/aug_sr.h"

#include <algorithm>
#include <set>

#include "laug/error.h"
#include "laug/textkit.h"
#include "laug/utf8.h"

namespace laug {

void SrConfig::Validate() const {
  if (!(p_confuse >= 0 && p_confuse <= 1)) throw ValidationError("sr.p_confuse must be in [0, 1]");
  if (!(p_liaison >= 0 && p_liaison <= 1)) throw ValidationError("sr.p_liaison must be in [0, 1]");
  if (!(redetect_threshold > 0 && redetect_threshold <= 1))
    throw ValidationError("sr.redetect_threshold must be in (0, 1]");
}

namespace {

struct LetterRule {
  std::string_view letters;
  std::vector<std::string> phonemes;
};

// Longest match first.
const std::vector<LetterRule>& LetterRules() {
  static const std::vector<LetterRule> rules = {
      {"tch", {"CH"}}, {"igh", {"AY"}}, {"th", {"TH"}}, {"sh", {"SH"}}, {"ch", {"CH"}},
      {"ph", {"F"}},   {"ck", {"K"}},   {"ng", {"NG"}}, {"qu", {"K", "W"}}, {"wh", {"W"}},
      {"gh", {}},      {"kn", {"N"}},   {"wr", {"R"}},  {"ee", {"IY"}}, {"ea", {"IY"}},
      {"ie", {"IY"}},  {"ey", {"IY"}},  {"oo", {"UW"}}, {"ou", {"AW"}}, {"ow", {"OW"}},
      {"oa", {"OW"}},  {"ai", {"EY"}},  {"ay", {"EY"}}, {"oi", {"OY"}}, {"oy", {"OY"}},
      {"au", {"AO"}},  {"aw", {"AO"}},  {"er", {"ER"}}, {"ir", {"ER"}}, {"ur", {"ER"}},
      {"ar", {"AA", "R"}}, {"or", {"AO", "R"}},
      {"a", {"AE"}}, {"b", {"B"}},  {"c", {"K"}},  {"d", {"D"}}, {"e", {"EH"}},
      {"f", {"F"}},  {"g", {"G"}},  {"h", {"HH"}}, {"i", {"IH"}}, {"j", {"JH"}},
      {"k", {"K"}},  {"l", {"L"}},  {"m", {"M"}},  {"n", {"N"}}, {"o", {"AA"}},
      {"p", {"P"}},  {"q", {"K"}},  {"r", {"R"}},  {"s", {"S"}}, {"t", {"T"}},
      {"u", {"AH"}}, {"v", {"V"}},  {"w", {"W"}},  {"x", {"K", "S"}}, {"y", {"Y"}},
      {"z", {"Z"}},
  };
  return rules;
}

PhonemeSeq PhonesFor(const std::string& lower, const PronunciationLexicon& lex) {
  if (const PhonemeSeq* p = lex.Find(lower)) return *p;
  return ApproximatePhonemes(lower);
}

std::string MatchCase(std::string_view model, std::string word) {
  if (!model.empty() && !word.empty() && model[0] >= 'A' && model[0] <= 'Z' && word[0] >= 'a' &&
      word[0] <= 'z')
    word[0] = static_cast<char>(word[0] - 32);
  return word;
}

// Lowercases and drops punctuation tokens; words are joined by one space.
std::string StripCasePunct(std::string_view text) {
  std::string out;
  for (const Token& t : Tokenize(utf8::ToLower(text))) {
    if (t.kind == TokenKind::kPunct) continue;
    if (!out.empty()) out += ' ';
    out += t.surface;
  }
  return out;
}

}  // namespace

PhonemeSeq ApproximatePhonemes(std::string_view word) {
  std::string w;
  for (char c : utf8::ToLower(word))
    if (c >= 'a' && c <= 'z') w.push_back(c);
  if (w.size() > 2 && w.back() == 'e') w.pop_back();
  PhonemeSeq out;
  std::size_t i = 0;
  while (i < w.size()) {
    // Doubled consonants sound once.
    if (i > 0 && w[i] == w[i - 1] && std::string_view("aeiou").find(w[i]) == std::string_view::npos) {
      ++i;
      continue;
    }
    for (const auto& rule : LetterRules()) {
      if (std::string_view(w).substr(i, rule.letters.size()) == rule.letters) {
        out.phonemes.insert(out.phonemes.end(), rule.phonemes.begin(), rule.phonemes.end());
        i += rule.letters.size();
        break;
      }
    }
  }
  if (!w.empty() && w.back() == 'y' && !out.phonemes.empty() && out.phonemes.back() == "Y")
    out.phonemes.back() = "IY";
  return out;
}

std::vector<ConfusionTable::Candidate> SoundAlikes(std::string_view word,
                                                   const ConfusionTable& table,
                                                   const PronunciationLexicon& lex) {
  const std::string lower = utf8::ToLower(word);
  if (auto it = table.similar.find(lower); it != table.similar.end()) return it->second;
  std::vector<ConfusionTable::Candidate> out;
  if (lex.size() == 0) return out;
  const PhonemeSeq pron = PhonesFor(lower, lex);
  if (pron.phonemes.empty()) return out;
  for (auto& n : lex.Neighbors(pron, lower)) out.push_back({std::move(n), 1.0});
  return out;
}

std::optional<std::string> LiaisonMerge(std::string_view w1, std::string_view w2,
                                        const ConfusionTable& table,
                                        const PronunciationLexicon& lex) {
  const std::string a = utf8::ToLower(w1), b = utf8::ToLower(w2);
  if (auto it = table.liaison.find({a, b}); it != table.liaison.end()) return it->second;
  if (lex.size() == 0) return std::nullopt;
  const PhonemeSeq pa = PhonesFor(a, lex), pb = PhonesFor(b, lex);
  if (pa.phonemes.empty() || pb.phonemes.empty()) return std::nullopt;
  if (pa.phonemes.back() != pb.phonemes.front()) return std::nullopt;
  if (!a.empty() && !b.empty() && a.back() == b.front()) return a + b.substr(1);
  return a + b;
}

AsrOutput SimulateAsr(const Utterance& u, const SrConfig& cfg, const ConfusionTable& table,
                      const PronunciationLexicon& lex, Rng& rng) {
  AsrOutput out;
  const std::string spoken = NumberToSpoken(u.text);
  if (spoken != u.text) out.trace.push_back("spoken: " + u.text + " => " + spoken);

  const TokenSeq toks = Tokenize(spoken);
  std::vector<bool> used(toks.size(), false);
  std::vector<Splice> splices;
  for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
    if (toks[i].kind != TokenKind::kWord || toks[i + 1].kind != TokenKind::kWord) continue;
    auto merged = LiaisonMerge(toks[i].surface, toks[i + 1].surface, table, lex);
    if (!merged || !rng.Bernoulli(cfg.p_liaison)) continue;
    std::string m = MatchCase(toks[i].surface, *merged);
    splices.push_back({toks[i].start, toks[i + 1].end, utf8::Decode(m)});
    out.trace.push_back("liaison: " + toks[i].surface + " " + toks[i + 1].surface + " => " + m);
    used[i] = used[i + 1] = true;
    ++i;
  }
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (used[i] || toks[i].kind != TokenKind::kWord) continue;
    auto cands = SoundAlikes(toks[i].surface, table, lex);
    if (cands.empty() || !rng.Bernoulli(cfg.p_confuse)) continue;
    std::vector<double> w;
    for (const auto& c : cands) w.push_back(c.weight);
    std::string m = MatchCase(toks[i].surface, cands[rng.Weighted(w)].word);
    splices.push_back({toks[i].start, toks[i].end, utf8::Decode(m)});
    out.trace.push_back("similar: " + toks[i].surface + " => " + m);
  }
  out.text = utf8::Encode(ApplySplices(utf8::Decode(spoken), {}, std::move(splices)).text);
  if (cfg.strip_case_punct) out.text = StripCasePunct(out.text);
  return out;
}

AugmentationRecord RedetectValues(const std::string& noisy, const Utterance& original,
                                  const SourceRef& src, const SrConfig& cfg,
                                  const std::vector<std::string>& trace) {
  std::vector<std::size_t> order(original.spans.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return original.spans[a].start < original.spans[b].start;
  });

  std::vector<std::optional<Detection>> found(original.da.size());
  std::vector<bool> spanned(original.da.size(), false);
  std::vector<CharRange> blocked;
  for (std::size_t k : order) {
    const std::size_t item = original.spans[k].item;
    if (spanned[item]) continue;
    spanned[item] = true;
    std::string needle = NumberToSpoken(original.da[item].value);
    if (cfg.strip_case_punct) needle = StripCasePunct(needle);
    found[item] = DetectValue(noisy, needle, cfg.redetect_threshold, blocked);
    if (found[item]) blocked.emplace_back(found[item]->start, found[item]->end);
  }

  AugmentationRecord rec;
  rec.method = Method::kSR;
  rec.source = src;
  rec.text = noisy;
  rec.notes.push_back("sr");
  rec.notes.insert(rec.notes.end(), trace.begin(), trace.end());
  std::set<std::string> keys;
  for (std::size_t j = 0; j < original.da.size(); ++j) {
    DialogActItem item = original.da[j];
    if (spanned[j]) {
      if (!found[j]) {
        rec.notes.push_back("dropped " + item.SlotKey() + " = " + item.value);
        continue;
      }
      const std::string window = utf8::Substr(noisy, found[j]->start, found[j]->end);
      if (utf8::Canonical(window) != utf8::Canonical(item.value))
        rec.notes.push_back("value " + item.SlotKey() + ": " + item.value + " -> " + window);
      item.value = window;
    }
    if (!keys.insert(CanonicalKey(item)).second) {
      rec.notes.push_back("merged duplicate " + item.SlotKey() + " = " + item.value);
      continue;
    }
    if (spanned[j]) rec.spans.push_back({rec.da.size(), found[j]->start, found[j]->end});
    rec.da.push_back(std::move(item));
  }
  if (noisy != original.text)
    rec.edits.push_back({0, utf8::Length(noisy), original.text, noisy});
  return rec;
}

AugmentationRecord SrAugment(const Utterance& u, const SourceRef& src, const SrConfig& cfg,
                             const ConfusionTable& table, const PronunciationLexicon& lex,
                             Rng& rng) {
  AsrOutput asr = SimulateAsr(u, cfg, table, lex, rng);
  return RedetectValues(asr.text, u, src, cfg, asr.trace);
}

}  // namespace laug
