// src/aug_wp.cc

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

#include "laug/aug_wp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "laug/error.h"
#include "laug/utf8.h"

namespace laug {

void WpConfig::Validate() const {
  if (!(alpha > 0 && alpha <= 1)) throw ValidationError("wp.alpha must be in (0, 1]");
  if (!(p_svr >= 0 && p_svr <= 1)) throw ValidationError("wp.p_svr must be in [0, 1]");
}

std::string_view EdaOpName(EdaOp op) {
  switch (op) {
    case EdaOp::kSynonym: return "synonym";
    case EdaOp::kInsert: return "insert";
    case EdaOp::kSwap: return "swap";
    case EdaOp::kDelete: return "delete";
  }
  return "swap";
}

std::size_t EditBudget(std::size_t word_count, double alpha) {
  auto n = static_cast<std::size_t>(std::llround(alpha * static_cast<double>(word_count)));
  return std::max<std::size_t>(1, n);
}

namespace {

template <typename T>
void Shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.Uniform(i)]);
}

void RequireWord(const TokenSeq& toks, std::size_t i) {
  if (i >= toks.size() || toks[i].kind != TokenKind::kWord)
    throw std::invalid_argument("EDA plan names token " + std::to_string(i) +
                                ", which is not a plain word");
}

// Matches the capitalization of the first letter of `model`.
std::u32string MatchCase(std::u32string_view model, std::u32string word) {
  if (model.empty() || word.empty()) return word;
  const bool upper = utf8::ToLower(model[0]) != model[0];
  if (upper && word[0] >= U'a' && word[0] <= U'z') word[0] = word[0] - 32;
  return word;
}

std::vector<std::size_t> EligibleForSynonyms(const TokenSeq& toks, const Thesaurus& thesaurus,
                                             const StopwordSet& stopwords) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind != TokenKind::kWord) continue;
    auto lower = utf8::ToLower(toks[i].surface);
    if (stopwords.count(lower) || !thesaurus.Find(lower)) continue;
    out.push_back(i);
  }
  return out;
}

}  // namespace

AugmentationRecord ApplyEdaPlan(const Utterance& u, const SourceRef& src, const EdaPlan& plan) {
  const TokenSeq toks = TokenizeWithSpans(u.text, u.spans);
  const std::u32string cps = utf8::Decode(u.text);
  std::vector<Splice> splices;
  std::vector<std::string> notes{"wp:" + std::string(EdaOpName(plan.op))};

  switch (plan.op) {
    case EdaOp::kSynonym:
      for (const auto& [i, syn] : plan.replacements) {
        RequireWord(toks, i);
        auto model = std::u32string_view(cps).substr(toks[i].start, toks[i].end - toks[i].start);
        splices.push_back({toks[i].start, toks[i].end, MatchCase(model, utf8::Decode(syn))});
        notes.push_back("synonym " + toks[i].surface + " -> " + syn);
      }
      break;
    case EdaOp::kInsert:
      for (const auto& [i, word] : plan.insertions) {
        if (i > toks.size()) throw std::invalid_argument("insertion point out of range");
        if (toks.empty()) throw std::invalid_argument("cannot insert into empty text");
        // Tokens glued together ("Cambridge." or "\"hello") need a space on
        // both sides of the new word, except before punctuation.
        const bool glued = i < toks.size() && i > 0 && toks[i - 1].end == toks[i].start;
        if (glued) {
          const std::string tail = toks[i].kind == TokenKind::kPunct ? "" : " ";
          splices.push_back({toks[i].start, toks[i].start, utf8::Decode(" " + word + tail)});
        } else if (i < toks.size()) {
          splices.push_back({toks[i].start, toks[i].start, utf8::Decode(word + " ")});
        } else
          splices.push_back({toks.back().end, toks.back().end, utf8::Decode(" " + word)});
        notes.push_back("insert " + word + " @" + std::to_string(i));
      }
      break;
    case EdaOp::kSwap: {
      std::vector<std::string> surfaces;
      for (const auto& t : toks) surfaces.push_back(t.surface);
      for (const auto& [a, b] : plan.swaps) {
        RequireWord(toks, a);
        RequireWord(toks, b);
        std::swap(surfaces[a], surfaces[b]);
        notes.push_back("swap " + std::to_string(a) + " " + std::to_string(b));
      }
      for (std::size_t i = 0; i < toks.size(); ++i)
        if (surfaces[i] != toks[i].surface)
          splices.push_back({toks[i].start, toks[i].end, utf8::Decode(surfaces[i])});
      break;
    }
    case EdaOp::kDelete: {
      std::vector<std::size_t> del = plan.deletions;
      std::sort(del.begin(), del.end());
      del.erase(std::unique(del.begin(), del.end()), del.end());
      if (del.size() >= WordCount(toks))
        throw std::invalid_argument("deletion plan would remove every word");
      std::vector<CharRange> ranges;
      for (std::size_t i : del) {
        RequireWord(toks, i);
        std::size_t b = toks[i].start, e = toks[i].end;
        if (e < cps.size() && utf8::IsSpace(cps[e])) {
          while (e < cps.size() && utf8::IsSpace(cps[e])) ++e;
        } else {
          while (b > 0 && utf8::IsSpace(cps[b - 1])) --b;
        }
        ranges.emplace_back(b, e);
        notes.push_back("delete " + toks[i].surface);
      }
      std::sort(ranges.begin(), ranges.end());
      std::vector<CharRange> merged;
      for (const auto& r : ranges) {
        if (!merged.empty() && r.first < merged.back().second)
          merged.back().second = std::max(merged.back().second, r.second);
        else
          merged.push_back(r);
      }
      for (const auto& [b, e] : merged) splices.push_back({b, e, {}});
      break;
    }
  }
  AugmentationRecord rec = SpliceRecord(Method::kWP, src, u, std::move(splices));
  rec.notes = std::move(notes);
  return rec;
}

EdaPlan SampleEdaPlan(const TokenSeq& toks, EdaOp op, const Thesaurus& thesaurus,
                      const WpConfig& cfg, Rng& rng) {
  std::vector<std::size_t> words;
  for (std::size_t i = 0; i < toks.size(); ++i)
    if (toks[i].kind == TokenKind::kWord) words.push_back(i);
  const std::size_t n = EditBudget(words.size(), cfg.alpha);
  EdaPlan plan;
  plan.op = op;

  switch (op) {
    case EdaOp::kSynonym: {
      auto eligible = EligibleForSynonyms(toks, thesaurus, cfg.stopwords);
      if (eligible.empty()) throw NoCandidateError("no word with a synonym");
      Shuffle(eligible, rng);
      eligible.resize(std::min(n, eligible.size()));
      std::sort(eligible.begin(), eligible.end());
      for (std::size_t i : eligible) {
        const auto& syns = *thesaurus.Find(utf8::ToLower(toks[i].surface));
        plan.replacements.emplace_back(i, syns[rng.Uniform(syns.size())]);
      }
      break;
    }
    case EdaOp::kInsert: {
      auto eligible = EligibleForSynonyms(toks, thesaurus, cfg.stopwords);
      if (eligible.empty()) throw NoCandidateError("no word with a synonym to insert");
      const std::size_t gaps =
          toks.size() + (toks.back().kind == TokenKind::kPunct ? 0 : 1);
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t i = eligible[rng.Uniform(eligible.size())];
        const auto& syns = *thesaurus.Find(utf8::ToLower(toks[i].surface));
        const std::string& syn = syns[rng.Uniform(syns.size())];
        plan.insertions.emplace_back(rng.Uniform(gaps), syn);
      }
      break;
    }
    case EdaOp::kSwap: {
      if (words.size() < 2) throw NoCandidateError("swap needs two words");
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t a = rng.Uniform(words.size());
        std::size_t b = rng.Uniform(words.size() - 1);
        if (b >= a) ++b;
        plan.swaps.emplace_back(words[a], words[b]);
      }
      break;
    }
    case EdaOp::kDelete: {
      if (words.size() < 2) throw NoCandidateError("deletion would empty the utterance");
      Shuffle(words, rng);
      words.resize(std::min(n, words.size() - 1));
      std::sort(words.begin(), words.end());
      plan.deletions = words;
      break;
    }
  }
  return plan;
}

AugmentationRecord EdaPerturb(const Utterance& u, const SourceRef& src, EdaOp op,
                              const Thesaurus& thesaurus, const WpConfig& cfg, Rng& rng) {
  const TokenSeq toks = TokenizeWithSpans(u.text, u.spans);
  if (WordCount(toks) == 0) throw NoCandidateError("utterance has no plain words");
  return ApplyEdaPlan(u, src, SampleEdaPlan(toks, op, thesaurus, cfg, rng));
}

AugmentationRecord ReplaceSlotValue(const Utterance& u, const SourceRef& src,
                                    std::size_t span_index, const std::string& new_value) {
  if (span_index >= u.spans.size()) throw std::invalid_argument("span index out of range");
  const std::size_t item = u.spans[span_index].item;
  std::vector<Splice> splices;
  for (const auto& sp : u.spans)
    if (sp.item == item) splices.push_back({sp.start, sp.end, utf8::Decode(new_value)});
  AugmentationRecord rec = SpliceRecord(Method::kWP, src, u, std::move(splices));
  const std::string old = rec.da[item].value;
  rec.da[item].value = new_value;
  rec.notes = {"wp:svr", "svr " + u.da[item].SlotKey() + ": " + old + " -> " + new_value};
  return rec;
}

AugmentationRecord SlotValueReplace(const Utterance& u, const SourceRef& src,
                                    const UnseenValuePool& pool, Rng& rng) {
  std::vector<std::pair<std::size_t, std::vector<const std::string*>>> eligible;
  for (std::size_t k = 0; k < u.spans.size(); ++k) {
    const auto& item = u.da[u.spans[k].item];
    auto it = pool.values.find(utf8::ToLower(item.SlotKey()));
    if (it == pool.values.end()) continue;
    std::vector<const std::string*> options;
    for (const auto& v : it->second)
      if (utf8::Canonical(v) != utf8::Canonical(item.value)) options.push_back(&v);
    if (!options.empty()) eligible.emplace_back(k, std::move(options));
  }
  if (eligible.empty()) throw NoSlotError("no span has an unseen-value pool entry");
  const auto& [span_index, options] = eligible[rng.Uniform(eligible.size())];
  return ReplaceSlotValue(u, src, span_index, *options[rng.Uniform(options.size())]);
}

AugmentationRecord WpAugment(const Utterance& u, const SourceRef& src, const WpConfig& cfg,
                             const Thesaurus& thesaurus, const UnseenValuePool& pool, Rng& rng) {
  const bool svr_first = rng.Bernoulli(cfg.p_svr);
  std::vector<int> ops = {0, 1, 2, 3};
  Shuffle(ops, rng);
  constexpr int kSvr = -1;
  std::vector<int> attempts;
  if (svr_first) attempts.push_back(kSvr);
  attempts.insert(attempts.end(), ops.begin(), ops.end());
  if (!svr_first && cfg.p_svr > 0) attempts.push_back(kSvr);

  for (int a : attempts) {
    try {
      if (a == kSvr) return SlotValueReplace(u, src, pool, rng);
      return EdaPerturb(u, src, static_cast<EdaOp>(a), thesaurus, cfg, rng);
    } catch (const NoCandidateError&) {
    }
  }
  throw NoCandidateError("no word perturbation applies");
}

}  // namespace laug
