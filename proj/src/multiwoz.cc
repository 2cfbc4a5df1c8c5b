// src/multiwoz.cc

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

// Adapter from the MultiWOZ 2.x release layout to the native corpus model.
//
// Each dialog is {"log": [turn...]}; even turns are the user. A turn carries
// "dialog_act": {"Domain-Intent": [[slot, value], ...]} and
// "span_info": [["Domain-Intent", slot, value, first_word, last_word], ...]
// where word indices address the whitespace-split text, inclusive.
// System-side acts are dropped. Slot "none" marks a slot-less intent.

#include <algorithm>
#include <set>

#include "json.hpp"
#include "laug/corpus.h"
#include "laug/error.h"
#include "laug/utf8.h"

namespace laug {

namespace {

using nlohmann::json;

struct WordPos {
  std::size_t start, end;
};

std::vector<WordPos> WhitespaceWords(std::u32string_view text) {
  std::vector<WordPos> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && utf8::IsSpace(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t b = i;
    while (i < text.size() && !utf8::IsSpace(text[i])) ++i;
    words.push_back({b, i});
  }
  return words;
}

std::pair<std::string, std::string> SplitAct(const std::string& act) {
  auto dash = act.find('-');
  if (dash == std::string::npos) throw ParseError("malformed act name '" + act + "'");
  return {utf8::ToLower(act.substr(0, dash)), utf8::ToLower(act.substr(dash + 1))};
}

DialogActItem MakeItem(const std::string& act, const std::string& slot,
                       const std::string& value) {
  auto [domain, intent] = SplitAct(act);
  std::string s = utf8::ToLower(utf8::Trim(slot));
  std::string v = utf8::Trim(value);
  if (s == "none" || s.empty()) return {domain, intent, "", ""};
  return {domain, intent, s, v};
}

}  // namespace

Corpus ImportMultiWoz(std::string_view data_json, std::span<const std::string> val_ids,
                      std::span<const std::string> test_ids) {
  json doc;
  try {
    doc = json::parse(data_json);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("MultiWOZ data is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("MultiWOZ data must be an object keyed by dialog id");
  std::set<std::string> val(val_ids.begin(), val_ids.end());
  std::set<std::string> test(test_ids.begin(), test_ids.end());

  Corpus c;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string id = it.key();
    const auto& log = it.value().at("log");
    Dialog d;
    d.id = id;
    d.split = test.count(id) ? Split::kTest : val.count(id) ? Split::kValidation : Split::kTrain;
    for (std::size_t t = 0; t < log.size(); ++t) {
      const auto& turn = log[t];
      Utterance u;
      u.speaker = (t % 2 == 0) ? Speaker::kUser : Speaker::kSystem;
      u.text = turn.at("text").get<std::string>();
      if (u.speaker == Speaker::kUser) {
        if (auto acts = turn.find("dialog_act"); acts != turn.end() && acts->is_object()) {
          for (auto a = acts->begin(); a != acts->end(); ++a)
            for (const auto& pair : a.value()) {
              auto item = MakeItem(a.key(), pair.at(0).get<std::string>(),
                                   pair.at(1).get<std::string>());
              if (std::find_if(u.da.begin(), u.da.end(), [&](const DialogActItem& x) {
                    return CanonicalKey(x) == CanonicalKey(item);
                  }) == u.da.end())
                u.da.push_back(std::move(item));
            }
        }
        const auto cps = utf8::Decode(u.text);
        const auto words = WhitespaceWords(cps);
        if (auto spans = turn.find("span_info"); spans != turn.end() && spans->is_array()) {
          for (const auto& s : *spans) {
            auto item = MakeItem(s.at(0).get<std::string>(), s.at(1).get<std::string>(),
                                 s.at(2).get<std::string>());
            auto first = s.at(3).get<std::size_t>();
            auto last = s.at(4).get<std::size_t>();
            if (first > last || last >= words.size()) continue;
            auto found = std::find_if(u.da.begin(), u.da.end(), [&](const DialogActItem& x) {
              return CanonicalKey(x) == CanonicalKey(item);
            });
            if (found == u.da.end()) continue;
            u.spans.push_back({static_cast<std::size_t>(found - u.da.begin()),
                               words[first].start, words[last].end});
          }
        }
      }
      d.turns.push_back(std::move(u));
    }
    c.dialogs.push_back(std::move(d));
  }
  Finalize(c);
  return c;
}

}  // namespace laug
