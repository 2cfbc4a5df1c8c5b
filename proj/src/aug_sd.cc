// src/aug_sd.cc

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

#include "laug/aug_sd.h"

#include <stdexcept>

#include "laug/error.h"
#include "laug/utf8.h"

namespace laug {

namespace {

std::string_view KindName(TokenKind k) {
  switch (k) {
    case TokenKind::kWord: return "word";
    case TokenKind::kAtom: return "atom";
    case TokenKind::kPunct: return "punct";
  }
  return "word";
}

const std::string& Pick(const std::vector<WeightedTerm>& terms, Rng& rng) {
  if (terms.empty()) throw ValidationError("disfluency term list is empty");
  std::vector<double> w;
  for (const auto& t : terms) w.push_back(t.weight);
  return terms[rng.Weighted(w)].term;
}

void CheckPoint(const TokenSeq& toks, std::size_t p) {
  if (p >= toks.size() || toks[p].kind == TokenKind::kPunct)
    throw std::invalid_argument("interruption point " + std::to_string(p) + " is not eligible");
}

std::vector<std::size_t> EligiblePoints(const TokenSeq& toks) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < toks.size(); ++i)
    if (toks[i].kind != TokenKind::kPunct) out.push_back(i);
  return out;
}

AugmentationRecord Finish(const Utterance& u, const SourceRef& src, std::vector<Splice> splices,
                          std::vector<std::string> notes) {
  AugmentationRecord rec = SpliceRecord(Method::kSD, src, u, std::move(splices));
  rec.notes = std::move(notes);
  return rec;
}

}  // namespace

std::vector<std::size_t> SampleInterruptionPoints(const TokenSeq& toks,
                                                  const DisfluencyDistributions& dist,
                                                  Rng& rng) {
  std::vector<std::size_t> points;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == TokenKind::kPunct) continue;
    const std::size_t decile = 10 * i / toks.size();
    if (rng.Bernoulli(dist.PointProbability(KindName(toks[i].kind), decile))) points.push_back(i);
  }
  return points;
}

AugmentationRecord InjectPauses(const Utterance& u, const SourceRef& src,
                                const std::vector<std::size_t>& points,
                                const std::vector<std::string>& fillers) {
  if (points.size() != fillers.size())
    throw std::invalid_argument("one filler per interruption point");
  const TokenSeq toks = TokenizeWithSpans(u.text, u.spans);
  std::vector<Splice> splices;
  std::vector<std::string> notes{"sd:pause"};
  for (std::size_t k = 0; k < points.size(); ++k) {
    CheckPoint(toks, points[k]);
    const std::size_t at = toks[points[k]].end;
    splices.push_back({at, at, utf8::Decode(" " + fillers[k])});
    notes.push_back("pause " + fillers[k] + " @" + std::to_string(points[k]));
  }
  return Finish(u, src, std::move(splices), std::move(notes));
}

AugmentationRecord InjectPauses(const Utterance& u, const SourceRef& src,
                                const std::vector<std::size_t>& points,
                                const DisfluencyDistributions& dist, Rng& rng) {
  std::vector<std::string> fillers;
  for (std::size_t k = 0; k < points.size(); ++k) fillers.push_back(Pick(dist.fillers, rng));
  return InjectPauses(u, src, points, fillers);
}

AugmentationRecord InjectRepeats(const Utterance& u, const SourceRef& src,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& points) {
  const TokenSeq toks = TokenizeWithSpans(u.text, u.spans);
  const std::u32string cps = utf8::Decode(u.text);
  std::vector<Splice> splices;
  std::vector<std::string> notes{"sd:repeat"};
  for (const auto& [p, width] : points) {
    CheckPoint(toks, p);
    if (toks[p].kind != TokenKind::kWord) continue;
    std::size_t w = 1;
    while (w < width && w <= p && toks[p - w].kind == TokenKind::kWord) ++w;
    const std::size_t from = toks[p + 1 - w].start, to = toks[p].end;
    std::u32string text = U", " + cps.substr(from, to - from);
    splices.push_back({to, to, text});
    notes.push_back("repeat " + utf8::Encode(text.substr(2)) + " @" + std::to_string(p));
  }
  return Finish(u, src, std::move(splices), std::move(notes));
}

AugmentationRecord InjectRepeats(const Utterance& u, const SourceRef& src,
                                 const std::vector<std::size_t>& points, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> plan;
  for (std::size_t p : points) plan.emplace_back(p, 1 + rng.Uniform(2));
  return InjectRepeats(u, src, plan);
}

AugmentationRecord InjectRestart(const Utterance& u, const SourceRef& src,
                                 const std::string& term) {
  if (Tokenize(u.text).empty()) throw NoCandidateError("nothing to restart");
  const TokenSeq toks = TokenizeWithSpans(u.text, u.spans);
  const std::size_t at = toks.front().start;
  return Finish(u, src, {{at, at, utf8::Decode(term + " ")}}, {"sd:restart", "restart " + term});
}

AugmentationRecord InjectRestart(const Utterance& u, const SourceRef& src,
                                 const DisfluencyDistributions& dist, Rng& rng) {
  if (Tokenize(u.text).empty()) throw NoCandidateError("nothing to restart");
  return InjectRestart(u, src, Pick(dist.restart_terms, rng));
}

AugmentationRecord InjectRepair(const Utterance& u, const SourceRef& src,
                                std::size_t span_index, const std::string& reparandum,
                                const std::string& edit_term) {
  if (span_index >= u.spans.size()) throw std::invalid_argument("span index out of range");
  const std::size_t at = u.spans[span_index].start;
  const std::string text = reparandum + ", " + edit_term + " ";
  return Finish(u, src, {{at, at, utf8::Decode(text)}},
                {"sd:repair", "repair " + reparandum + " / " + edit_term + " @span" +
                                  std::to_string(span_index)});
}

AugmentationRecord InjectRepair(const Utterance& u, const SourceRef& src,
                                const Ontology& ontology, const DisfluencyDistributions& dist,
                                Rng& rng) {
  std::vector<std::pair<std::size_t, std::vector<const std::string*>>> eligible;
  for (std::size_t k = 0; k < u.spans.size(); ++k) {
    const auto& item = u.da[u.spans[k].item];
    auto it = ontology.find(utf8::ToLower(item.SlotKey()));
    if (it == ontology.end()) continue;
    std::vector<const std::string*> others;
    for (const auto& v : it->second)
      if (utf8::Canonical(v) != utf8::Canonical(item.value)) others.push_back(&v);
    if (!others.empty()) eligible.emplace_back(k, std::move(others));
  }
  if (eligible.empty()) throw NoRepairableSlotError("no span has an alternative value");
  const auto& [k, others] = eligible[rng.Uniform(eligible.size())];
  const std::string& reparandum = *others[rng.Uniform(others.size())];
  return InjectRepair(u, src, k, reparandum, Pick(dist.edit_terms, rng));
}

AugmentationRecord SdAugment(const Utterance& u, const SourceRef& src, const Ontology& ontology,
                             const DisfluencyDistributions& dist, Rng& rng) {
  auto type = static_cast<DisfluencyType>(rng.Weighted(dist.type_mix));
  const TokenSeq toks = TokenizeWithSpans(u.text, u.spans);
  if (toks.empty()) throw NoCandidateError("empty utterance");

  AugmentationRecord rec;
  if (type == DisfluencyType::kRepair) {
    try {
      rec = InjectRepair(u, src, ontology, dist, rng);
      rec.notes.insert(rec.notes.begin() + 1, "type=repair");
      return rec;
    } catch (const NoRepairableSlotError&) {
      type = DisfluencyType::kPause;
    }
  }
  if (type == DisfluencyType::kRestart) {
    rec = InjectRestart(u, src, dist, rng);
  } else {
    auto points = SampleInterruptionPoints(toks, dist, rng);
    if (type == DisfluencyType::kRepeat) {
      std::erase_if(points, [&](std::size_t p) { return toks[p].kind != TokenKind::kWord; });
      if (points.empty()) {
        std::vector<std::size_t> words;
        for (std::size_t i = 0; i < toks.size(); ++i)
          if (toks[i].kind == TokenKind::kWord) words.push_back(i);
        if (words.empty()) {
          type = DisfluencyType::kPause;
        } else {
          points.push_back(words[rng.Uniform(words.size())]);
        }
      }
    }
    if (type == DisfluencyType::kRepeat) {
      rec = InjectRepeats(u, src, points, rng);
    } else {
      if (points.empty()) {
        auto eligible = EligiblePoints(toks);
        if (eligible.empty()) throw NoCandidateError("no interruption point");
        points.push_back(eligible[rng.Uniform(eligible.size())]);
      }
      rec = InjectPauses(u, src, points, dist, rng);
    }
  }
  rec.notes.insert(rec.notes.begin() + 1, "type=" + std::string(DisfluencyName(type)));
  return rec;
}

}  // namespace laug
