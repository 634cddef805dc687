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

#ifndef TTSCORPUS_LANGUAGE_CONFIG_H_
#define TTSCORPUS_LANGUAGE_CONFIG_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "ttscorpus/utf8.h"

namespace ttscorpus {

struct CodepointRange {
  Codepoint first = 0;
  Codepoint last = 0;

  bool Contains(Codepoint cp) const { return cp >= first && cp <= last; }
};

enum class CharClass {
  kConsonant,
  kVowelSign,
  kIndependentVowel,
  kVirama,
  kNukta,
  kNasalization,
  kJoiner,
  kDigit,
  kFullStop,
  kUnmapped,  // in-block but not described by the config
  kOutOfBlock,
};

// Script description for one language. Phone labels come from
// `phone_inventory`; Validate() enforces that and the block invariants.
//
// File format (UTF-8):
//
//   # comment
//   language_id = hi
//   script_block = U+0900..U+097F
//   virama = U+094D
//   nukta = U+093C                 (optional)
//   inherent_vowel = a
//   schwa_deletion = true
//   full_stop_marks = U+0964 U+0965 (optional)
//   digit_range = U+0966..U+096F   (optional)
//   phones = a aa b ...
//
//   [consonants]
//   U+0915 = k
//   [vowel_signs]
//   [independent_vowels]
//   [nasalization_marks]
//
// Nasalization marks map to a phone label so that anusvara/candrabindu
// participate in phone coverage.
struct LanguageConfig {
  std::string language_id;
  CodepointRange script_block;
  Codepoint virama = 0;
  std::optional<Codepoint> nukta;
  std::string inherent_vowel;
  bool schwa_deletion = false;
  std::set<Codepoint> full_stop_marks;
  std::optional<CodepointRange> digit_range;
  std::set<std::string> phone_inventory;
  std::map<Codepoint, std::string> consonant_map;
  std::map<Codepoint, std::string> vowel_sign_map;
  std::map<Codepoint, std::string> independent_vowel_map;
  std::map<Codepoint, std::string> nasalization_marks;

  CharClass Classify(Codepoint cp) const;

  // Throws Error(kConfigError) naming the first broken invariant.
  void Validate() const;
};

LanguageConfig ParseLanguageConfig(std::string_view text);
LanguageConfig LoadLanguageConfig(const std::string& path);

}  // namespace ttscorpus

#endif  // TTSCORPUS_LANGUAGE_CONFIG_H_
