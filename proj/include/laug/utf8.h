// laug/utf8.h

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

// Code-point level helpers. Every offset the toolkit stores is a code-point
// index into the UTF-8 text, never a byte index.

#ifndef LAUG_UTF8_H_
#define LAUG_UTF8_H_

#include <string>
#include <string_view>

namespace laug::utf8 {

// Throws ParseError on malformed UTF-8.
std::u32string Decode(std::string_view bytes);
std::string Encode(std::u32string_view cps);

// Number of code points; throws ParseError on malformed input.
std::size_t Length(std::string_view bytes);

// Code points [start, end) of a UTF-8 string, re-encoded.
std::string Substr(std::string_view bytes, std::size_t start, std::size_t end);

char32_t ToLower(char32_t c);
std::u32string ToLower(std::u32string_view s);
std::string ToLower(std::string_view s);

bool IsSpace(char32_t c);
bool IsDigit(char32_t c);
// Letters and digits, including every non-ASCII code point that is not
// listed as punctuation or space.
bool IsAlnum(char32_t c);
bool IsPunct(char32_t c);

// Trim, collapse internal whitespace runs to one space, lowercase.
std::u32string Canonical(std::u32string_view s);
std::string Canonical(std::string_view s);

std::string Trim(std::string_view s);

}  // namespace laug::utf8

#endif  // LAUG_UTF8_H_
