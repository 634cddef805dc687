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

#ifndef TTSCORPUS_CURATION_H_
#define TTSCORPUS_CURATION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ttscorpus/language_config.h"

namespace ttscorpus {

enum class Severity { kFixApplied, kNeedsHuman };
std::string_view SeverityName(Severity s);

// `begin`/`end` are byte offsets into the text the check ran on.
struct Violation {
  std::string rule;
  std::size_t begin = 0;
  std::size_t end = 0;
  Severity severity = Severity::kNeedsHuman;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct CurationVerdict {
  std::string sentence_id;
  std::vector<Violation> violations;
  std::string normalized_text;

  bool NeedsHuman() const;
  int CountFixes() const;
};

using Lexicon = std::map<std::string, std::string>;

// Removes every punctuation mark except comma, full stop and danda. A mark
// that sat between two non-space characters becomes a space; whitespace is
// collapsed. One fix-applied violation per removed mark.
CurationVerdict CheckPunctuation(std::string_view text);

// Flags digits, symbols, abbreviations ("U.S.", "Dr.") and all-caps runs as
// needs-human. Tokens with an exact lexicon entry are expanded instead
// (fix-applied); a trailing comma or full stop is kept outside the match.
CurationVerdict FlagNonlexical(std::string_view text, const LanguageConfig& cfg,
                               const Lexicon& lexicon = {});

// Case-insensitive whole-word match; multi-word keywords match runs of
// consecutive words.
CurationVerdict FlagSensitive(std::string_view text,
                              const std::vector<std::string>& keywords);

// Words with more aksharas than `max_syllables`.
CurationVerdict FlagLongWords(std::string_view text, const LanguageConfig& cfg,
                              int max_syllables);

// Words whose corpus frequency is below `min_count`.
CurationVerdict FlagUncommonWords(
    std::string_view text,
    const std::map<std::string, std::int64_t>& word_freq,
    std::int64_t min_count);

// Adjacent repetitions of the same 1..3 word phrase.
CurationVerdict FlagRepeatedPhrases(std::string_view text);

struct CurationResources {
  Lexicon lexicon;
  std::vector<std::string> keywords;
  int max_syllables_per_word = 5;
  std::map<std::string, std::int64_t> word_freq;  // empty disables the check
  std::int64_t min_word_count = 2;
};

// Full pass. Spans refer to `text`; normalized_text applies only the
// fix-applied edits, so Curate(normalized) yields no further fixes.
CurationVerdict Curate(const std::string& id, std::string_view text,
                       const LanguageConfig& cfg,
                       const CurationResources& res);

// Whitespace-separated words of a text with their stripped core (edge
// punctuation removed) and byte span of that core.
struct WordSpan {
  std::string core;
  std::size_t begin = 0;
  std::size_t end = 0;
};
std::vector<WordSpan> SplitWords(std::string_view text);

Lexicon LoadLexicon(const std::string& path);
std::vector<std::string> LoadKeywords(const std::string& path);

}  // namespace ttscorpus

#endif  // TTSCORPUS_CURATION_H_
