// src/augment.cc

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

#include "laug/augment.h"

#include <algorithm>
#include <stdexcept>

#include "laug/utf8.h"

namespace laug {

std::string_view MethodName(Method m) {
  switch (m) {
    case Method::kWP: return "WP";
    case Method::kTP: return "TP";
    case Method::kSR: return "SR";
    case Method::kSD: return "SD";
  }
  return "WP";
}

std::optional<Method> ParseMethod(std::string_view s) {
  std::string up;
  for (char c : s) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (up == "WP") return Method::kWP;
  if (up == "TP") return Method::kTP;
  if (up == "SR") return Method::kSR;
  if (up == "SD") return Method::kSD;
  return std::nullopt;
}

SpliceResult ApplySplices(std::u32string_view text, std::span<const SpanAnnotation> spans,
                          std::vector<Splice> splices) {
  std::stable_sort(splices.begin(), splices.end(), [](const Splice& a, const Splice& b) {
    return a.start < b.start;
  });
  for (std::size_t k = 0; k < splices.size(); ++k) {
    if (splices[k].start > splices[k].end || splices[k].end > text.size())
      throw std::logic_error("splice out of range");
    if (k > 0 && splices[k].start < splices[k - 1].end)
      throw std::logic_error("overlapping splices");
  }

  SpliceResult res;
  std::vector<std::size_t> new_start(splices.size());
  std::size_t cursor = 0;
  for (std::size_t k = 0; k < splices.size(); ++k) {
    const auto& sp = splices[k];
    res.text.append(text.substr(cursor, sp.start - cursor));
    new_start[k] = res.text.size();
    res.text.append(sp.text);
    cursor = sp.end;
    res.edits.push_back({new_start[k], res.text.size(),
                         utf8::Encode(text.substr(sp.start, sp.end - sp.start)),
                         utf8::Encode(sp.text)});
  }
  res.text.append(text.substr(cursor));
  std::erase_if(res.edits, [](const TextEdit& e) { return e.removed == e.inserted; });

  for (const auto& span : spans) {
    std::ptrdiff_t shift = 0;
    std::optional<SpanAnnotation> mapped;
    for (std::size_t k = 0; k < splices.size(); ++k) {
      const auto& sp = splices[k];
      const std::ptrdiff_t delta = static_cast<std::ptrdiff_t>(sp.text.size()) -
                                   static_cast<std::ptrdiff_t>(sp.end - sp.start);
      if (sp.start < sp.end && sp.start == span.start && sp.end == span.end) {
        mapped = SpanAnnotation{span.item, new_start[k], new_start[k] + sp.text.size()};
        break;
      }
      if (sp.end <= span.start) {
        shift += delta;
      } else if (sp.start >= span.end) {
        break;
      } else {
        throw std::logic_error("splice intersects the interior of a span");
      }
    }
    if (!mapped)
      mapped = SpanAnnotation{span.item, static_cast<std::size_t>(span.start + shift),
                              static_cast<std::size_t>(span.end + shift)};
    res.spans.push_back(*mapped);
  }
  return res;
}

AugmentationRecord SpliceRecord(Method method, const SourceRef& src, const Utterance& u,
                                std::vector<Splice> splices) {
  auto res = ApplySplices(utf8::Decode(u.text), u.spans, std::move(splices));
  AugmentationRecord rec;
  rec.method = method;
  rec.source = src;
  rec.text = utf8::Encode(res.text);
  rec.da = u.da;
  rec.spans = std::move(res.spans);
  rec.edits = std::move(res.edits);
  return rec;
}

std::string RevertEdits(const AugmentationRecord& rec) {
  std::u32string text = utf8::Decode(rec.text);
  std::vector<TextEdit> edits = rec.edits;
  std::sort(edits.begin(), edits.end(),
            [](const TextEdit& a, const TextEdit& b) { return a.new_start > b.new_start; });
  for (const auto& e : edits) {
    if (e.new_end > text.size() || e.new_start > e.new_end)
      throw std::logic_error("edit out of range");
    text.replace(e.new_start, e.new_end - e.new_start, utf8::Decode(e.removed));
  }
  return utf8::Encode(text);
}

}  // namespace laug
