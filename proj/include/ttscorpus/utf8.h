// Copyright (c) 2026 The ttscorpus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TTSCORPUS_UTF8_H_
#define TTSCORPUS_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ttscorpus {

using Codepoint = char32_t;

// One decoded codepoint together with its byte range in the source string.
struct DecodedChar {
  Codepoint cp;
  std::size_t begin;
  std::size_t end;
};

// Throws Error(kParseError) on malformed UTF-8.
std::vector<DecodedChar> DecodeUtf8(std::string_view text);
std::vector<Codepoint> ToCodepoints(std::string_view text);

void AppendUtf8(Codepoint cp, std::string* out);
std::string ToUtf8(const std::vector<Codepoint>& cps);

bool IsUnicodeSpace(Codepoint cp);
constexpr bool IsJoiner(Codepoint cp) { return cp == 0x200C || cp == 0x200D; }
constexpr bool IsAsciiDigit(Codepoint cp) { return cp >= '0' && cp <= '9'; }
constexpr bool IsAsciiLetter(Codepoint cp) {
  return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

// Coarse Unicode classes for the characters curation cares about. Not a full
// general-category table: covers ASCII, Latin-1, general punctuation,
// currency, letterlike, arrows/math/misc symbols and CJK/fullwidth marks.
// ASCII # $ % & @ count as symbols: they carry lexical content ("50%").
bool IsPunctuation(Codepoint cp);
bool IsSymbol(Codepoint cp);

// "U+0915" style rendering used by configs and error messages.
std::string FormatCodepoint(Codepoint cp);

}  // namespace ttscorpus

#endif  // TTSCORPUS_UTF8_H_
