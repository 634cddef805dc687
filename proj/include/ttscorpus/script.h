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

#ifndef TTSCORPUS_SCRIPT_H_
#define TTSCORPUS_SCRIPT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ttscorpus/error.h"
#include "ttscorpus/language_config.h"

namespace ttscorpus {

// Strict rejects sentences with unmapped in-block codepoints or foreign
// letters; lenient drops those characters and records a warning.
enum class ParseMode { kStrict, kLenient };

struct TokenizeResult {
  std::vector<std::string> words;
  // Characters stripped from the text, in order of appearance.
  std::vector<std::string> punctuation;
  std::vector<std::string> digits;
  std::vector<std::string> foreign;
};

// Splits on whitespace and strips everything that is not part of the script
// (punctuation, digits, letters of other scripts). ZWJ/ZWNJ stay inside the
// word they appear in.
TokenizeResult Tokenize(std::string_view text, const LanguageConfig& cfg);

enum class AksharaKind { kConsonantCluster, kIndependentVowel, kOther };

struct Akshara {
  std::string text;
  AksharaKind kind = AksharaKind::kOther;

  bool operator==(const Akshara&) const = default;
};

// Greedy left-to-right orthographic syllable segmentation. Consonants joined
// by virama fuse into one akshara with any trailing vowel sign and
// nasalization marks. Throws kEmptyWord or kUnknownCodepoint.
std::vector<Akshara> Syllabify(std::string_view word, const LanguageConfig& cfg);

// Rule-based phone expansion of an already segmented word.
std::vector<std::string> ToPhones(const std::vector<Akshara>& aksharas,
                                  const LanguageConfig& cfg);
std::vector<std::string> ToPhones(std::string_view word,
                                  const LanguageConfig& cfg);

struct SentenceRecord {
  std::string id;
  std::string raw_text;
  std::vector<std::string> words;
  std::vector<std::vector<std::string>> syllables_per_word;
  std::vector<std::string> phones;
  int word_count = 0;
  int syllable_count = 0;
  // Digits or foreign letters were present and stripped.
  bool needs_normalization = false;
  std::vector<std::string> warnings;

  bool operator==(const SentenceRecord&) const = default;
};

struct Rejection {
  std::string id;
  ErrorCode reason;
  std::string detail;

  bool operator==(const Rejection&) const = default;
};

using Analysis = std::variant<SentenceRecord, Rejection>;

Analysis AnalyzeSentence(const std::string& id, std::string_view text,
                         const LanguageConfig& cfg,
                         ParseMode mode = ParseMode::kStrict);

// Unique syllables of a record, sorted.
std::vector<std::string> UniqueSyllables(const SentenceRecord& rec);
std::vector<std::string> UniquePhones(const SentenceRecord& rec);

}  // namespace ttscorpus

#endif  // TTSCORPUS_SCRIPT_H_
