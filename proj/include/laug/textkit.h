// laug/textkit.h

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

// Text machinery shared by all augmenters.

#ifndef LAUG_TEXTKIT_H_
#define LAUG_TEXTKIT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "laug/corpus.h"
#include "laug/resources.h"

namespace laug {

enum class TokenKind { kWord, kAtom, kPunct };

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::kWord;
  std::size_t start = 0;  // code points
  std::size_t end = 0;
  // For atoms: the DA item the covered span annotates, and which span it is.
  std::optional<std::size_t> span_ref;
  std::optional<std::size_t> span_index;
};

using TokenSeq = std::vector<Token>;

// Whitespace splits words; punctuation becomes its own token unless it sits
// between two alphanumerics ("I'm", "20:45", "1,000"). Each span becomes a
// single atom token. Throws SpanBoundaryError when a span begins or ends in
// the middle of a word and ValidationError when spans are out of range or
// overlap.
TokenSeq TokenizeWithSpans(std::string_view text, std::span<const SpanAnnotation> spans);
TokenSeq Tokenize(std::string_view text);

// Count of kWord tokens (atoms and punctuation excluded).
std::size_t WordCount(const TokenSeq& toks);

// Length of the longest common subsequence of two code-point strings.
std::size_t LongestCommonSubsequence(std::u32string_view a, std::u32string_view b);

// 2 * LCS / (|a| + |b|) over lowercased code points; 1.0 for two empty
// strings.
double FuzzyRatio(std::string_view a, std::string_view b);

struct Detection {
  std::size_t start = 0;  // code points into the searched text
  std::size_t end = 0;
  double score = 0;
  friend bool operator==(const Detection&, const Detection&) = default;
};

using CharRange = std::pair<std::size_t, std::size_t>;

// Best token-aligned window of `text` whose token length is within two of the
// value's and whose FuzzyRatio against `value` reaches `threshold`. Ties go
// to the leftmost, then the shortest window. Windows never begin or end on a
// punctuation token and never overlap a `blocked` range.
std::optional<Detection> DetectValue(std::string_view text, std::string_view value,
                                     double threshold,
                                     std::span<const CharRange> blocked = {});

// Clock times, integers 0-9999, decimals and currency amounts rewritten as
// spoken English. Idempotent.
std::string NumberToSpoken(std::string_view text);

// Cardinal words for 0..9999, e.g. 45 -> "forty five".
std::string CardinalWords(int n);

std::optional<PhonemeSeq> Phonemes(std::string_view word, const PronunciationLexicon& lex);

}  // namespace laug

#endif  // LAUG_TEXTKIT_H_
