// laug/augment.h

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

// Types shared by the four augmenters, plus the splice engine they use to
// rewrite text while keeping span offsets consistent.

#ifndef LAUG_AUGMENT_H_
#define LAUG_AUGMENT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "laug/corpus.h"

namespace laug {

enum class Method { kWP, kTP, kSR, kSD };

std::string_view MethodName(Method m);
std::optional<Method> ParseMethod(std::string_view s);

struct SourceRef {
  std::string dialog_id;
  std::size_t turn = 0;
  friend bool operator==(const SourceRef&, const SourceRef&) = default;
};

// One applied rewrite, in output coordinates: output[new_start, new_end) is
// `inserted`, which replaced `removed` from the input. Pure insertions have
// empty `removed`.
struct TextEdit {
  std::size_t new_start = 0;
  std::size_t new_end = 0;
  std::string removed;
  std::string inserted;
  friend bool operator==(const TextEdit&, const TextEdit&) = default;
};

struct AugmentationRecord {
  Method method = Method::kWP;
  SourceRef source;
  std::string text;
  std::vector<DialogActItem> da;
  std::vector<SpanAnnotation> spans;
  std::vector<std::string> notes;
  std::vector<TextEdit> edits;

  Utterance AsUtterance() const { return {Speaker::kUser, text, da, spans}; }
};

// Undoes every recorded edit; for a well-formed record this yields the
// source text.
std::string RevertEdits(const AugmentationRecord& rec);

// Replace input[start, end) with `text`; start == end is an insertion.
struct Splice {
  std::size_t start = 0;
  std::size_t end = 0;
  std::u32string text;
};

struct SpliceResult {
  std::u32string text;
  std::vector<SpanAnnotation> spans;
  std::vector<TextEdit> edits;
};

// Applies non-overlapping splices (insertions at the same point keep their
// given order) and re-offsets spans. A span whose range equals a replacement
// splice's range takes the replacement's output range. Any other overlap
// between a span interior and a splice throws std::logic_error.
SpliceResult ApplySplices(std::u32string_view text, std::span<const SpanAnnotation> spans,
                          std::vector<Splice> splices);

// Record for `u` after applying splices, DA copied unchanged.
AugmentationRecord SpliceRecord(Method method, const SourceRef& src, const Utterance& u,
                                std::vector<Splice> splices);

}  // namespace laug

#endif  // LAUG_AUGMENT_H_
