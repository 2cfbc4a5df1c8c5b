// src/corpus.cc

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

#include "laug/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "laug/error.h"
#include "laug/utf8.h"

namespace laug {

using nlohmann::json;

std::string_view SpeakerName(Speaker s) {
  return s == Speaker::kUser ? "user" : "system";
}

std::string_view SplitName(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kValidation: return "validation";
    case Split::kTest: return "test";
  }
  return "train";
}

std::optional<Speaker> ParseSpeaker(std::string_view s) {
  if (s == "user") return Speaker::kUser;
  if (s == "system") return Speaker::kSystem;
  return std::nullopt;
}

std::optional<Split> ParseSplit(std::string_view s) {
  if (s == "train") return Split::kTrain;
  if (s == "validation" || s == "val") return Split::kValidation;
  if (s == "test") return Split::kTest;
  return std::nullopt;
}

bool operator==(const DialogActItem& a, const DialogActItem& b) {
  return utf8::Canonical(a.domain) == utf8::Canonical(b.domain) &&
         utf8::Canonical(a.intent) == utf8::Canonical(b.intent) &&
         utf8::Canonical(a.slot) == utf8::Canonical(b.slot) &&
         utf8::Canonical(a.value) == utf8::Canonical(b.value);
}

std::string CanonicalKey(const DialogActItem& item) {
  return utf8::Canonical(item.domain) + "|" + utf8::Canonical(item.intent) + "|" +
         utf8::Canonical(item.slot) + "|" + utf8::Canonical(item.value);
}

bool SameDaSet(std::span<const DialogActItem> a, std::span<const DialogActItem> b) {
  std::set<std::string> ka, kb;
  for (const auto& i : a) ka.insert(CanonicalKey(i));
  for (const auto& i : b) kb.insert(CanonicalKey(i));
  return ka == kb;
}

std::string LoadIssue::ToString() const {
  std::string s = "dialog '" + dialog_id + "'";
  if (turn) s += " turn " + std::to_string(*turn);
  return s + ": " + message;
}

const Dialog* Corpus::Find(std::string_view id) const {
  for (const auto& d : dialogs)
    if (d.id == id) return &d;
  return nullptr;
}

std::vector<std::string> ValidateUtterance(const Utterance& u) {
  std::vector<std::string> problems;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < u.da.size(); ++i) {
    const auto& item = u.da[i];
    const std::string where = "da[" + std::to_string(i) + "]";
    if (utf8::Trim(item.domain).empty() || utf8::Trim(item.intent).empty())
      problems.push_back(where + " has empty domain or intent");
    if (!utf8::Trim(item.slot).empty() && utf8::Trim(item.value).empty())
      problems.push_back(where + " has a slot but no value");
    if (!seen.insert(CanonicalKey(item)).second)
      problems.push_back(where + " duplicates an earlier item");
  }

  std::u32string text;
  try {
    text = utf8::Decode(u.text);
  } catch (const ParseError& e) {
    problems.push_back(std::string("text is not valid UTF-8: ") + e.what());
    return problems;
  }
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t k = 0; k < u.spans.size(); ++k) {
    const auto& sp = u.spans[k];
    const std::string where = "spans[" + std::to_string(k) + "]";
    if (sp.item >= u.da.size()) {
      problems.push_back(where + " references missing item " + std::to_string(sp.item));
      continue;
    }
    const auto& item = u.da[sp.item];
    if (!item.HasValue()) {
      problems.push_back(where + " references an item without a literal value");
      continue;
    }
    if (!(sp.start < sp.end && sp.end <= text.size())) {
      problems.push_back(where + " range [" + std::to_string(sp.start) + ", " +
                         std::to_string(sp.end) + ") invalid for text of length " +
                         std::to_string(text.size()));
      continue;
    }
    auto surface = std::u32string_view(text).substr(sp.start, sp.end - sp.start);
    if (utf8::Canonical(surface) != utf8::Canonical(utf8::Decode(item.value))) {
      problems.push_back(where + " text '" + utf8::Encode(surface) +
                         "' does not match value '" + item.value + "'");
      continue;
    }
    ranges.emplace_back(sp.start, sp.end);
  }
  std::sort(ranges.begin(), ranges.end());
  for (std::size_t k = 1; k < ranges.size(); ++k)
    if (ranges[k].first < ranges[k - 1].second)
      problems.push_back("spans overlap at offset " + std::to_string(ranges[k].first));
  return problems;
}

std::vector<LoadIssue> ValidateDialog(const Dialog& d) {
  std::vector<LoadIssue> issues;
  for (std::size_t t = 0; t < d.turns.size(); ++t) {
    const Speaker expected = (t % 2 == 0) ? Speaker::kUser : Speaker::kSystem;
    if (d.turns[t].speaker != expected)
      issues.push_back({d.id, t,
                        "speakers must alternate starting with user; expected " +
                            std::string(SpeakerName(expected))});
    for (auto& p : ValidateUtterance(d.turns[t])) issues.push_back({d.id, t, p});
  }
  return issues;
}

namespace {

void AddOntologyValue(Ontology& onto, const std::string& key, const std::string& value) {
  auto& values = onto[utf8::ToLower(key)];
  const std::string canon = utf8::Canonical(value);
  for (const auto& v : values)
    if (utf8::Canonical(v) == canon) return;
  values.push_back(value);
}

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

std::string GetString(const json& obj, const char* key, const std::string& where,
                      bool required = true) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) Fail(where, std::string("missing field '") + key + "'");
    return {};
  }
  if (!it->is_string()) Fail(where, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

std::size_t GetIndex(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(where, std::string("missing field '") + key + "'");
  if (!it->is_number_integer() || it->get<long long>() < 0)
    Fail(where, std::string("field '") + key + "' must be a non-negative integer");
  return it->get<std::size_t>();
}

std::vector<DialogActItem> ParseDa(const json& arr, const std::string& where) {
  if (!arr.is_array()) Fail(where, "'da' must be an array");
  std::vector<DialogActItem> da;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& x = arr[i];
    const std::string w = where + " da[" + std::to_string(i) + "]";
    if (!x.is_object()) Fail(w, "must be an object");
    da.push_back({GetString(x, "domain", w), GetString(x, "intent", w),
                  GetString(x, "slot", w, false), GetString(x, "value", w, false)});
  }
  return da;
}

json DaToJson(std::span<const DialogActItem> da) {
  json arr = json::array();
  for (const auto& i : da)
    arr.push_back({{"domain", i.domain}, {"intent", i.intent}, {"slot", i.slot},
                   {"value", i.value}});
  return arr;
}

Utterance ParseTurn(const json& x, const std::string& where) {
  if (!x.is_object()) Fail(where, "turn must be an object");
  Utterance u;
  auto sp = ParseSpeaker(GetString(x, "speaker", where));
  if (!sp) Fail(where, "speaker must be 'user' or 'system'");
  u.speaker = *sp;
  u.text = GetString(x, "text", where);
  if (auto it = x.find("da"); it != x.end()) u.da = ParseDa(*it, where);
  if (auto it = x.find("spans"); it != x.end()) {
    if (!it->is_array()) Fail(where, "'spans' must be an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const auto& s = (*it)[k];
      const std::string w = where + " spans[" + std::to_string(k) + "]";
      if (!s.is_object()) Fail(w, "must be an object");
      u.spans.push_back({GetIndex(s, "item", w), GetIndex(s, "start", w),
                         GetIndex(s, "end", w)});
    }
  }
  return u;
}

std::vector<ContextTurn> ParseContext(const json& arr, const std::string& where) {
  if (!arr.is_array()) Fail(where, "'context' must be an array");
  std::vector<ContextTurn> out;
  for (const auto& x : arr) {
    auto sp = ParseSpeaker(GetString(x, "speaker", where));
    if (!sp) Fail(where, "context speaker must be 'user' or 'system'");
    out.push_back({*sp, GetString(x, "text", where)});
  }
  return out;
}

}  // namespace

void Finalize(Corpus& c, const LoadOptions& opts) {
  c.issues.clear();
  std::unordered_set<std::string> ids;
  for (auto& d : c.dialogs) {
    auto issues = ValidateDialog(d);
    if (!ids.insert(d.id).second)
      issues.push_back({d.id, std::nullopt, "duplicate dialog id"});
    if (opts.strict && !issues.empty()) throw ValidationError(issues.front().ToString());
    d.quarantined = !issues.empty();
    for (auto& i : issues) c.issues.push_back(std::move(i));
    if (d.quarantined) continue;
    for (const auto& u : d.turns)
      for (const auto& sp : u.spans) {
        const auto& item = u.da[sp.item];
        AddOntologyValue(c.ontology, item.SlotKey(), item.value);
      }
  }
}

Ontology SplitOntology(const Corpus& c, Split split) {
  Ontology onto;
  for (const auto& d : c.dialogs) {
    if (d.split != split) continue;
    for (const auto& u : d.turns)
      for (const auto& item : u.da)
        if (item.HasValue()) AddOntologyValue(onto, item.SlotKey(), item.value);
  }
  return onto;
}

Corpus ParseCorpus(std::string_view json_text, const LoadOptions& opts) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("corpus is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dialogs") || !doc["dialogs"].is_array())
    throw ParseError("corpus must be an object with a 'dialogs' array");

  Corpus c;
  const auto& dialogs = doc["dialogs"];
  for (std::size_t i = 0; i < dialogs.size(); ++i) {
    const auto& x = dialogs[i];
    std::string where = "dialogs[" + std::to_string(i) + "]";
    if (!x.is_object()) Fail(where, "must be an object");
    Dialog d;
    d.id = GetString(x, "id", where);
    where = "dialog '" + d.id + "'";
    auto split = ParseSplit(GetString(x, "split", where));
    if (!split) Fail(where, "split must be train, validation or test");
    d.split = *split;
    auto turns = x.find("turns");
    if (turns == x.end() || !turns->is_array()) Fail(where, "'turns' must be an array");
    for (std::size_t t = 0; t < turns->size(); ++t)
      d.turns.push_back(ParseTurn((*turns)[t], where + " turn " + std::to_string(t)));
    if (auto m = x.find("augment"); m != x.end()) {
      AugmentMeta meta;
      meta.method = GetString(*m, "method", where);
      meta.source_dialog = GetString(*m, "source_dialog", where);
      meta.source_turn = GetIndex(*m, "source_turn", where);
      if (auto ctx = m->find("context"); ctx != m->end())
        meta.context = ParseContext(*ctx, where);
      if (auto notes = m->find("notes"); notes != m->end()) {
        if (!notes->is_array()) Fail(where, "'notes' must be an array");
        for (const auto& n : *notes) {
          if (!n.is_string()) Fail(where, "notes must be strings");
          meta.notes.push_back(n.get<std::string>());
        }
      }
      d.augment = std::move(meta);
    }
    c.dialogs.push_back(std::move(d));
  }
  if (auto onto = doc.find("ontology"); onto != doc.end()) {
    if (!onto->is_object()) throw ParseError("'ontology' must be an object");
    for (auto it = onto->begin(); it != onto->end(); ++it) {
      if (!it.value().is_array()) throw ParseError("ontology values must be arrays");
      for (const auto& v : it.value()) {
        if (!v.is_string()) throw ParseError("ontology values must be strings");
        AddOntologyValue(c.ontology, it.key(), v.get<std::string>());
      }
    }
  }
  Finalize(c, opts);
  return c;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return ss.str();
}

void WriteFileAtomic(const std::filesystem::path& path, std::string_view bytes) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("error writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename '" + tmp.string() + "': " + ec.message());
}

Corpus LoadCorpus(const std::filesystem::path& path, const LoadOptions& opts) {
  return ParseCorpus(ReadFile(path), opts);
}

std::string SerializeCorpus(const Corpus& c) {
  json dialogs = json::array();
  for (const auto& d : c.dialogs) {
    json turns = json::array();
    for (const auto& u : d.turns) {
      json spans = json::array();
      for (const auto& s : u.spans)
        spans.push_back({{"item", s.item}, {"start", s.start}, {"end", s.end}});
      turns.push_back({{"speaker", SpeakerName(u.speaker)},
                       {"text", u.text},
                       {"da", DaToJson(u.da)},
                       {"spans", spans}});
    }
    json jd = {{"id", d.id}, {"split", SplitName(d.split)}, {"turns", turns}};
    if (d.augment) {
      json ctx = json::array();
      for (const auto& t : d.augment->context)
        ctx.push_back({{"speaker", SpeakerName(t.speaker)}, {"text", t.text}});
      jd["augment"] = {{"method", d.augment->method},
                       {"source_dialog", d.augment->source_dialog},
                       {"source_turn", d.augment->source_turn},
                       {"context", ctx},
                       {"notes", d.augment->notes}};
    }
    dialogs.push_back(std::move(jd));
  }
  json onto = json::object();
  for (const auto& [k, v] : c.ontology) onto[k] = v;
  json doc = {{"dialogs", dialogs}, {"ontology", onto}};
  return doc.dump(1) + "\n";
}

void SaveCorpus(const Corpus& c, const std::filesystem::path& path) {
  WriteFileAtomic(path, SerializeCorpus(c));
}

std::vector<LuExample> ExtractLuExamples(const Corpus& c, std::size_t m,
                                         std::optional<Split> split) {
  std::vector<LuExample> out;
  for (const auto& d : c.dialogs) {
    if (split && d.split != *split) continue;
    std::vector<ContextTurn> history;
    if (d.augment) history = d.augment->context;
    for (std::size_t t = 0; t < d.turns.size(); ++t) {
      const auto& u = d.turns[t];
      if (u.speaker == Speaker::kUser) {
        LuExample ex;
        const std::size_t take = std::min(m, history.size());
        ex.context.assign(history.end() - static_cast<std::ptrdiff_t>(take), history.end());
        ex.context.push_back({u.speaker, u.text});
        ex.gold = u.da;
        ex.dialog_id = d.id;
        ex.turn = t;
        out.push_back(std::move(ex));
      }
      history.push_back({u.speaker, u.text});
    }
  }
  return out;
}

}  // namespace laug
