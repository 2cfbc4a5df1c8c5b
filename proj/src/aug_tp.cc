// src/aug_tp.cc

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

#include "laug/aug_tp.h"

#include <algorithm>
#include <map>

#include "laug/error.h"
#include "laug/textkit.h"
#include "laug/utf8.h"

namespace laug {

// --- Serialization ---------------------------------------------------------

SerializedDa SerializeDa(std::span<const DialogActItem> da,
                         const std::set<std::string>& first_mention) {
  // domain -> intent -> item indices, in annotation order
  std::map<std::string, std::map<std::string, std::vector<std::size_t>>> groups;
  for (std::size_t i = 0; i < da.size(); ++i) groups[da[i].domain][da[i].intent].push_back(i);

  SerializedDa out;
  for (const auto& [domain, intents] : groups) {
    if (!out.text.empty()) out.text += ' ';
    out.text += domain;
    if (first_mention.count(domain)) {
      out.text += " *";
      out.starred.insert(domain);
    }
    out.text += " {";
    for (const auto& [intent, idx] : intents) {
      std::vector<std::string> pairs;
      bool slotless = false;
      for (std::size_t i : idx) {
        if (da[i].slot.empty())
          slotless = true;
        else
          pairs.push_back(da[i].slot + " = " + da[i].value);
      }
      if (!pairs.empty()) {
        out.text += " " + intent + " (";
        for (std::size_t k = 0; k < pairs.size(); ++k)
          out.text += (k ? " ; " : " ") + pairs[k];
        out.text += " )";
      }
      if (slotless) out.text += " " + intent + " ( )";
    }
    out.text += " }";
  }
  return out;
}

namespace {

class DaReader {
 public:
  explicit DaReader(std::string_view s) : s_(s) {}

  bool AtEnd() {
    SkipWs();
    return i_ >= s_.size();
  }
  bool Peek(char c) {
    SkipWs();
    return i_ < s_.size() && s_[i_] == c;
  }
  void Expect(char c) {
    if (!Peek(c)) Fail(std::string("expected '") + c + "'");
    ++i_;
  }
  std::string Word() {
    SkipWs();
    std::size_t b = i_;
    while (i_ < s_.size() && s_[i_] != ' ' && s_[i_] != '(' && s_[i_] != '{' && s_[i_] != '=')
      ++i_;
    if (b == i_) Fail("expected a name");
    return std::string(s_.substr(b, i_ - b));
  }
  // Value text runs to the next " ;" or " )".
  std::string Value() {
    SkipWs();
    std::size_t b = i_;
    std::size_t e = std::min(s_.find(" ;", b), s_.find(" )", b));
    if (e == std::string_view::npos) Fail("unterminated value");
    i_ = e;
    return std::string(s_.substr(b, e - b));
  }
  [[noreturn]] void Fail(const std::string& what) {
    throw ParseError("serialized DA, offset " + std::to_string(i_) + ": " + what);
  }

 private:
  void SkipWs() {
    while (i_ < s_.size() && s_[i_] == ' ') ++i_;
  }
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

ParsedDa ParseSerializedDa(std::string_view text) {
  ParsedDa out;
  DaReader r(text);
  while (!r.AtEnd()) {
    const std::string domain = r.Word();
    if (r.Peek('*')) {
      r.Expect('*');
      out.starred.insert(domain);
    }
    r.Expect('{');
    while (!r.Peek('}')) {
      if (r.AtEnd()) r.Fail("unterminated domain group");
      const std::string intent = r.Word();
      r.Expect('(');
      if (r.Peek(')')) {
        r.Expect(')');
        out.items.push_back({domain, intent, "", ""});
        continue;
      }
      while (true) {
        std::string slot = r.Word();
        r.Expect('=');
        std::string value = r.Value();
        out.items.push_back({domain, intent, std::move(slot), std::move(value)});
        if (r.Peek(';')) {
          r.Expect(';');
          continue;
        }
        r.Expect(')');
        break;
      }
    }
    r.Expect('}');
  }
  return out;
}

std::set<std::string> FirstMentionDomains(const Dialog& d, std::size_t turn) {
  if (turn >= d.turns.size()) throw std::out_of_range("turn index out of range");
  std::set<std::string> seen, out;
  for (std::size_t t = 0; t < turn; ++t)
    for (const auto& item : d.turns[t].da) seen.insert(item.domain);
  for (const auto& item : d.turns[turn].da)
    if (!seen.count(item.domain)) out.insert(item.domain);
  return out;
}

// --- Template generator ----------------------------------------------------

namespace {

std::string SlotPhrase(const std::string& slot, const std::string& v) {
  static const std::map<std::string, std::string> table = {
      {"dest", "going to {v}"},          {"destination", "going to {v}"},
      {"depart", "leaving from {v}"},    {"departure", "leaving from {v}"},
      {"arrive", "arriving by {v}"},     {"arriveby", "arriving by {v}"},
      {"leave", "leaving after {v}"},    {"leaveat", "leaving after {v}"},
      {"day", "on {v}"},                 {"people", "for {v} people"},
      {"stay", "for {v} nights"},        {"stars", "with {v} stars"},
      {"area", "in the {v}"},            {"price", "in the {v} price range"},
      {"pricerange", "in the {v} price range"},
      {"food", "serving {v} food"},      {"name", "called {v}"},
      {"time", "at {v}"},
  };
  auto it = table.find(utf8::ToLower(slot));
  std::string pat = it == table.end() ? "with " + slot + " {v}" : it->second;
  pat.replace(pat.find("{v}"), 3, v);
  return pat;
}

std::string SlotNoun(const std::string& slot) {
  static const std::map<std::string, std::string> table = {
      {"phone", "phone number"}, {"addr", "address"},       {"post", "postcode"},
      {"ref", "reference number"}, {"fee", "entrance fee"}, {"ticket", "ticket price"},
      {"leave", "departure time"}, {"arrive", "arrival time"}, {"time", "travel time"},
      {"id", "train id"},        {"car", "car type"},
  };
  auto it = table.find(utf8::ToLower(slot));
  return it == table.end() ? slot : it->second;
}

std::string JoinAnd(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += k + 1 == parts.size() ? " and " : ", ";
    out += parts[k];
  }
  return out;
}

std::string Capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 32);
  return s;
}

std::string Fill(std::string pat, const std::string& key, const std::string& v) {
  for (auto pos = pat.find(key); pos != std::string::npos; pos = pat.find(key, pos + v.size()))
    pat.replace(pos, key.size(), v);
  return pat;
}

struct Group {
  std::string domain;
  std::string intent;
  bool starred = false;
  std::vector<const DialogActItem*> items;  // empty for a slot-less group
};

std::vector<std::string> GroupTemplates(const Group& g) {
  const bool req = g.intent == "request";
  if (g.items.empty()) {
    if (g.intent == "thank") return {"Thank you very much.", "Thanks, that is all.", "Great, thanks."};
    if (g.intent == "bye") return {"Goodbye.", "Bye, have a nice day."};
    if (g.intent == "greet") return {"Hello.", "Hi there."};
    if (g.starred)
      return {"I would like to {i} a {d}, please.", "Can you help me {i} a {d}?"};
    return {"Please {i} it.", "Can you {i} that for me?"};
  }
  if (req) {
    if (g.starred)
      return {"Could you tell me the {s} of the {d}, please?",
              "I am interested in a {d}. What is the {s}?",
              "Can you give me the {s} for that {d}?"};
    return {"What is the {s}?", "And the {s}?", "Can I get the {s}?"};
  }
  if (g.starred)
    return {"Hi, I'm looking for a {d} that is {p}, is there anything like that?",
            "I need to find a {d} {p}. Can you help me with that?",
            "Hello, I would like a {d} {p}, please."};
  return {"Yes, {p}.", "Ok, {p}, please.", "{P}."};
}

std::string Realize(const Group& g, const std::string& pat) {
  std::vector<std::string> phrases, nouns;
  for (const auto* item : g.items) {
    phrases.push_back(SlotPhrase(item->slot, item->value));
    nouns.push_back(SlotNoun(item->slot));
  }
  std::string out = Fill(pat, "{P}", Capitalize(JoinAnd(phrases)));
  out = Fill(out, "{p}", JoinAnd(phrases));
  out = Fill(out, "{s}", JoinAnd(nouns));
  out = Fill(out, "{d}", g.domain);
  out = Fill(out, "{i}", g.intent);
  return out;
}

}  // namespace

std::vector<std::string> TemplateGenerator::Generate(const ParaphraseRequest& req, Rng& rng) {
  const ParsedDa parsed = ParseSerializedDa(req.da.text);
  std::vector<Group> groups;
  for (const auto& item : parsed.items) {
    const bool slotless = item.slot.empty();
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return g.domain == item.domain && g.intent == item.intent && g.items.empty() == slotless;
    });
    if (it == groups.end()) {
      groups.push_back({item.domain, item.intent, parsed.starred.count(item.domain) > 0, {}});
      it = groups.end() - 1;
    }
    if (!slotless) it->items.push_back(&item);
  }
  // A domain's opener only needs the star once.
  std::set<std::string> opened;
  for (auto& g : groups) {
    if (g.starred && !opened.insert(g.domain).second) g.starred = false;
  }

  std::vector<std::string> out;
  for (std::size_t attempt = 0; attempt < 4 * req.k && out.size() < req.k; ++attempt) {
    std::string sentence;
    for (const auto& g : groups) {
      auto pats = GroupTemplates(g);
      if (!sentence.empty()) sentence += ' ';
      sentence += Realize(g, pats[rng.Uniform(pats.size())]);
    }
    if (!sentence.empty() && std::find(out.begin(), out.end(), sentence) == out.end())
      out.push_back(std::move(sentence));
  }
  return out;
}

// --- Validation ------------------------------------------------------------

void TpConfig::Validate() const {
  if (!(detect_threshold > 0 && detect_threshold <= 1))
    throw ValidationError("tp.detect_threshold must be in (0, 1]");
  if (k == 0) throw ValidationError("tp.k must be positive");
}

namespace {

// Case-insensitive, word-aligned occurrences of needle in hay.
std::vector<CharRange> FindWordAligned(std::u32string_view hay, std::u32string_view needle) {
  std::vector<CharRange> out;
  if (needle.empty()) return out;
  for (std::size_t pos = hay.find(needle); pos != std::u32string_view::npos;
       pos = hay.find(needle, pos + 1)) {
    const std::size_t end = pos + needle.size();
    if (pos > 0 && utf8::IsAlnum(hay[pos - 1]) && utf8::IsAlnum(hay[pos])) continue;
    if (end < hay.size() && utf8::IsAlnum(hay[end - 1]) && utf8::IsAlnum(hay[end])) continue;
    out.emplace_back(pos, end);
  }
  return out;
}

}  // namespace

std::optional<AugmentationRecord> ValidateAndRepair(const std::string& candidate,
                                                    const Utterance& original,
                                                    const SourceRef& src,
                                                    const Ontology& ontology,
                                                    const TpConfig& cfg) {
  if (utf8::Trim(candidate).empty()) return std::nullopt;

  std::vector<std::size_t> order(original.spans.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return original.spans[a].start < original.spans[b].start;
  });

  std::vector<bool> done(original.da.size(), false);
  std::vector<CharRange> windows;
  std::vector<SpanAnnotation> spans;
  std::vector<Splice> splices;
  std::vector<std::string> notes{"tp"};
  const std::u32string cand = utf8::Decode(candidate);
  for (std::size_t k : order) {
    const std::size_t item = original.spans[k].item;
    if (done[item]) continue;
    done[item] = true;
    const std::string& value = original.da[item].value;
    auto det = DetectValue(candidate, value, cfg.detect_threshold, windows);
    if (!det) return std::nullopt;  // missing information
    windows.emplace_back(det->start, det->end);
    spans.push_back({item, det->start, det->end});
    const std::u32string want = utf8::Decode(value);
    if (cand.compare(det->start, det->end - det->start, want) != 0) {
      splices.push_back({det->start, det->end, want});
      notes.push_back("repaired " + utf8::Encode(cand.substr(det->start, det->end - det->start)) +
                      " -> " + value);
    }
  }

  // Redundancy: a known value that the original turn neither annotates nor
  // says.
  std::set<std::string> own;
  for (const auto& item : original.da)
    if (item.HasValue()) own.insert(utf8::Canonical(item.value));
  const std::u32string cand_lower = utf8::ToLower(cand);
  const std::u32string orig_lower = utf8::ToLower(utf8::Decode(original.text));
  for (const auto& [key, values] : ontology) {
    for (const auto& v : values) {
      const std::u32string needle = utf8::Canonical(utf8::Decode(v));
      if (needle.size() < cfg.min_redundant_length || own.count(utf8::Encode(needle))) continue;
      for (const auto& hit : FindWordAligned(cand_lower, needle)) {
        bool inside = std::any_of(windows.begin(), windows.end(), [&](const CharRange& w) {
          return hit.first < w.second && w.first < hit.second;
        });
        if (!inside && FindWordAligned(orig_lower, needle).empty()) return std::nullopt;
      }
    }
  }

  auto res = ApplySplices(cand, spans, std::move(splices));
  AugmentationRecord rec;
  rec.method = Method::kTP;
  rec.source = src;
  rec.text = utf8::Encode(res.text);
  rec.da = original.da;
  rec.spans = std::move(res.spans);
  rec.notes = std::move(notes);
  if (rec.text != original.text)
    rec.edits.push_back({0, res.text.size(), original.text, rec.text});
  return rec;
}

std::optional<AugmentationRecord> TpAugment(const Dialog& d, std::size_t turn,
                                            ParaphraseGenerator& gen, const Ontology& ontology,
                                            const TpConfig& cfg, Rng& rng) {
  if (turn >= d.turns.size()) throw std::out_of_range("turn index out of range");
  const Utterance& u = d.turns[turn];
  if (u.da.empty()) throw NoCandidateError("turn has no dialog act to paraphrase");

  ParaphraseRequest req;
  req.da = SerializeDa(u.da, FirstMentionDomains(d, turn));
  req.k = cfg.k;
  for (std::size_t t = turn > cfg.context_turns ? turn - cfg.context_turns : 0; t < turn; ++t)
    req.context.push_back(d.turns[t].text);

  const SourceRef src{d.id, turn};
  const std::string orig = utf8::Canonical(u.text);
  for (const auto& cand : gen.Generate(req, rng)) {
    if (utf8::Canonical(cand) == orig) continue;
    auto rec = ValidateAndRepair(cand, u, src, ontology, cfg);
    if (rec && utf8::Canonical(rec->text) != orig) {
      rec->notes.insert(rec->notes.begin() + 1, "da: " + req.da.text);
      return rec;
    }
  }
  return std::nullopt;
}

}  // namespace laug
