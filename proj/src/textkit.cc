// src/textkit.cc

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

#include "laug/textkit.h"

#include <algorithm>

#include "laug/error.h"
#include "laug/utf8.h"

namespace laug {

namespace {

// Splits [b, e) of text into word and punctuation tokens.
void TokenizeRegion(std::u32string_view text, std::size_t b, std::size_t e, TokenSeq& out) {
  std::size_t i = b;
  auto joiner = [&](std::size_t k) {
    return k > b && k + 1 < e && utf8::IsAlnum(text[k - 1]) && utf8::IsAlnum(text[k + 1]);
  };
  while (i < e) {
    if (utf8::IsSpace(text[i])) {
      ++i;
      continue;
    }
    if (utf8::IsPunct(text[i]) && !joiner(i)) {
      out.push_back({utf8::Encode(text.substr(i, 1)), TokenKind::kPunct, i, i + 1, {}, {}});
      ++i;
      continue;
    }
    std::size_t s = i;
    while (i < e && !utf8::IsSpace(text[i]) && !(utf8::IsPunct(text[i]) && !joiner(i))) ++i;
    out.push_back({utf8::Encode(text.substr(s, i - s)), TokenKind::kWord, s, i, {}, {}});
  }
}

}  // namespace

TokenSeq TokenizeWithSpans(std::string_view text, std::span<const SpanAnnotation> spans) {
  const std::u32string cps = utf8::Decode(text);
  std::vector<std::size_t> order(spans.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return spans[a].start < spans[b].start; });

  TokenSeq out;
  std::size_t cursor = 0;
  for (std::size_t k : order) {
    const auto& sp = spans[k];
    if (!(sp.start < sp.end && sp.end <= cps.size()))
      throw ValidationError("span [" + std::to_string(sp.start) + ", " +
                            std::to_string(sp.end) + ") out of range");
    if (sp.start < cursor) throw ValidationError("overlapping spans");
    if (sp.start > 0 && utf8::IsAlnum(cps[sp.start - 1]) && utf8::IsAlnum(cps[sp.start]))
      throw SpanBoundaryError("span starting at " + std::to_string(sp.start) +
                              " begins inside a word");
    if (sp.end < cps.size() && utf8::IsAlnum(cps[sp.end - 1]) && utf8::IsAlnum(cps[sp.end]))
      throw SpanBoundaryError("span ending at " + std::to_string(sp.end) +
                              " ends inside a word");
    TokenizeRegion(cps, cursor, sp.start, out);
    out.push_back({utf8::Encode(std::u32string_view(cps).substr(sp.start, sp.end - sp.start)),
                   TokenKind::kAtom, sp.start, sp.end, sp.item, k});
    cursor = sp.end;
  }
  TokenizeRegion(cps, cursor, cps.size(), out);
  return out;
}

TokenSeq Tokenize(std::string_view text) { return TokenizeWithSpans(text, {}); }

std::size_t WordCount(const TokenSeq& toks) {
  return static_cast<std::size_t>(std::count_if(
      toks.begin(), toks.end(), [](const Token& t) { return t.kind == TokenKind::kWord; }));
}

std::size_t LongestCommonSubsequence(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

namespace {

double RatioLower(std::u32string_view a, std::u32string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  return 2.0 * static_cast<double>(LongestCommonSubsequence(a, b)) /
         static_cast<double>(a.size() + b.size());
}

}  // namespace

double FuzzyRatio(std::string_view a, std::string_view b) {
  return RatioLower(utf8::ToLower(utf8::Decode(a)), utf8::ToLower(utf8::Decode(b)));
}

std::optional<Detection> DetectValue(std::string_view text, std::string_view value,
                                     double threshold, std::span<const CharRange> blocked) {
  const std::u32string lower = utf8::ToLower(utf8::Decode(text));
  const std::u32string needle = utf8::ToLower(utf8::Decode(value));
  const TokenSeq toks = Tokenize(text);
  const std::size_t k = std::max<std::size_t>(1, Tokenize(value).size());
  const std::size_t min_len = k > 2 ? k - 2 : 1;
  const std::size_t max_len = k + 2;

  std::optional<Detection> best;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == TokenKind::kPunct) continue;
    for (std::size_t len = min_len; len <= max_len && i + len <= toks.size(); ++len) {
      const Token& last = toks[i + len - 1];
      if (last.kind == TokenKind::kPunct) continue;
      const std::size_t s = toks[i].start, e = last.end;
      bool overlaps = std::any_of(blocked.begin(), blocked.end(), [&](const CharRange& r) {
        return s < r.second && r.first < e;
      });
      if (overlaps) continue;
      double score = RatioLower(std::u32string_view(lower).substr(s, e - s), needle);
      if (score < threshold) continue;
      // Scan order is leftmost-first then shortest-first, so only a strictly
      // higher score replaces the incumbent.
      if (!best || score > best->score) best = Detection{s, e, score};
    }
  }
  return best;
}

// --- Spoken numbers --------------------------------------------------------

std::string CardinalWords(int n) {
  static const char* kOnes[] = {"zero",    "one",     "two",       "three",    "four",
                                "five",    "six",     "seven",     "eight",    "nine",
                                "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
                                "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};
  static const char* kTens[] = {"",      "",      "twenty",  "thirty", "forty",
                                "fifty", "sixty", "seventy", "eighty", "ninety"};
  if (n < 0 || n > 9999) throw std::out_of_range("CardinalWords: " + std::to_string(n));
  if (n < 20) return kOnes[n];
  std::string out;
  auto append = [&](const std::string& w) {
    if (!out.empty()) out += ' ';
    out += w;
  };
  if (n >= 1000) {
    append(std::string(kOnes[n / 1000]) + " thousand");
    n %= 1000;
  }
  if (n >= 100) {
    append(std::string(kOnes[n / 100]) + " hundred");
    n %= 100;
  }
  if (n >= 20) {
    append(kTens[n / 10]);
    n %= 10;
    if (n) append(kOnes[n]);
  } else if (n > 0) {
    append(kOnes[n]);
  }
  return out;
}

namespace {

bool IsCurrency(char32_t c) { return c == U'£' || c == U'$' || c == U'€'; }

std::string CurrencyUnit(char32_t c, bool plural) {
  std::string base = c == U'£' ? "pound" : c == U'$' ? "dollar" : "euro";
  return plural ? base + "s" : base;
}

int DigitsValue(std::u32string_view d) {
  int v = 0;
  for (char32_t c : d) v = v * 10 + static_cast<int>(c - U'0');
  return v;
}

// A numeric cluster: digit runs joined by single ':', '.' or ',' characters.
struct Cluster {
  std::vector<std::u32string_view> groups;
  std::vector<char32_t> seps;
  std::size_t end = 0;
};

Cluster ScanCluster(std::u32string_view s, std::size_t i) {
  Cluster c;
  while (true) {
    std::size_t j = i;
    while (j < s.size() && utf8::IsDigit(s[j])) ++j;
    c.groups.push_back(s.substr(i, j - i));
    c.end = j;
    if (j + 1 < s.size() && (s[j] == U':' || s[j] == U'.' || s[j] == U',') &&
        utf8::IsDigit(s[j + 1])) {
      c.seps.push_back(s[j]);
      i = j + 1;
      continue;
    }
    return c;
  }
}

bool LeadingZero(std::u32string_view g) { return g.size() > 1 && g[0] == U'0'; }

std::string DigitWords(std::u32string_view d) {
  std::string out;
  for (char32_t c : d) {
    if (!out.empty()) out += ' ';
    out += CardinalWords(static_cast<int>(c - U'0'));
  }
  return out;
}

// Spoken form of a cluster, or nullopt when it is not a recognized pattern.
std::optional<std::string> SpeakCluster(const Cluster& c) {
  const auto& g = c.groups;
  if (g.size() == 1) {
    if (g[0].size() > 4 || LeadingZero(g[0])) return std::nullopt;
    return CardinalWords(DigitsValue(g[0]));
  }
  if (g.size() != 2) return std::nullopt;
  if (c.seps[0] == U':') {
    if (g[0].size() > 2 || g[1].size() != 2) return std::nullopt;
    int h = DigitsValue(g[0]), m = DigitsValue(g[1]);
    if (h > 23 || m > 59) return std::nullopt;
    std::string out = CardinalWords(h);
    if (m == 0) return out + " o'clock";
    if (m < 10) return out + " oh " + CardinalWords(m);
    return out + " " + CardinalWords(m);
  }
  if (c.seps[0] == U'.') {
    if (g[0].size() > 4 || LeadingZero(g[0])) return std::nullopt;
    return CardinalWords(DigitsValue(g[0])) + " point " + DigitWords(g[1]);
  }
  // Thousands separator.
  if (g[0].size() != 1 || g[1].size() != 3 || g[0][0] == U'0') return std::nullopt;
  return CardinalWords(DigitsValue(g[0]) * 1000 + DigitsValue(g[1]));
}

std::optional<std::string> SpeakCurrency(char32_t symbol, const Cluster& c) {
  const auto& g = c.groups;
  if (g.size() > 2 || g[0].size() > 4 || LeadingZero(g[0])) return std::nullopt;
  if (g.size() == 2 && (c.seps[0] != U'.' || g[1].size() != 2)) return std::nullopt;
  const int whole = DigitsValue(g[0]);
  std::string out = CardinalWords(whole) + " " + CurrencyUnit(symbol, whole != 1);
  if (g.size() == 2 && DigitsValue(g[1]) != 0) out += " " + CardinalWords(DigitsValue(g[1]));
  return out;
}

}  // namespace

std::string NumberToSpoken(std::string_view text) {
  const std::u32string s = utf8::Decode(text);
  std::string out;
  std::size_t i = 0;
  auto before_ok = [&](std::size_t k) { return k == 0 || !utf8::IsAlnum(s[k - 1]); };
  auto after_ok = [&](std::size_t k) { return k >= s.size() || !utf8::IsAlnum(s[k]); };
  while (i < s.size()) {
    const char32_t c = s[i];
    if (IsCurrency(c) && before_ok(i) && i + 1 < s.size() && utf8::IsDigit(s[i + 1])) {
      Cluster cl = ScanCluster(s, i + 1);
      std::optional<std::string> spoken;
      if (after_ok(cl.end)) spoken = SpeakCurrency(c, cl);
      out += spoken ? *spoken : utf8::Encode(std::u32string_view(s).substr(i, cl.end - i));
      i = cl.end;
      continue;
    }
    if (utf8::IsDigit(c)) {
      Cluster cl = ScanCluster(s, i);
      std::optional<std::string> spoken;
      if (before_ok(i) && after_ok(cl.end)) spoken = SpeakCluster(cl);
      out += spoken ? *spoken : utf8::Encode(std::u32string_view(s).substr(i, cl.end - i));
      i = cl.end;
      continue;
    }
    out += utf8::Encode(std::u32string_view(s).substr(i, 1));
    ++i;
  }
  return out;
}

std::optional<PhonemeSeq> Phonemes(std::string_view word, const PronunciationLexicon& lex) {
  if (word.empty()) return std::nullopt;
  if (const PhonemeSeq* p = lex.Find(utf8::ToLower(word))) return *p;
  return std::nullopt;
}

}  // namespace laug
