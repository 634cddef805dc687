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

#include "ttscorpus/script.h"

#include <algorithm>
#include <set>

namespace ttscorpus {

namespace {

bool IsScriptChar(CharClass c) {
  switch (c) {
    case CharClass::kConsonant:
    case CharClass::kVowelSign:
    case CharClass::kIndependentVowel:
    case CharClass::kVirama:
    case CharClass::kNukta:
    case CharClass::kNasalization:
    case CharClass::kJoiner:
    case CharClass::kUnmapped:
      return true;
    default:
      return false;
  }
}

std::string Utf8Of(Codepoint cp) {
  std::string s;
  AppendUtf8(cp, &s);
  return s;
}

}  // namespace

TokenizeResult Tokenize(std::string_view text, const LanguageConfig& cfg) {
  TokenizeResult result;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) result.words.push_back(std::move(current));
    current.clear();
  };
  for (const auto& d : DecodeUtf8(text)) {
    const Codepoint cp = d.cp;
    if (IsUnicodeSpace(cp)) {
      flush();
      continue;
    }
    const CharClass cls = cfg.Classify(cp);
    if (IsScriptChar(cls)) {
      AppendUtf8(cp, &current);
    } else if (cls == CharClass::kFullStop || IsPunctuation(cp) ||
               IsSymbol(cp)) {
      result.punctuation.push_back(Utf8Of(cp));
    } else if (cls == CharClass::kDigit || IsAsciiDigit(cp)) {
      result.digits.push_back(Utf8Of(cp));
    } else {
      result.foreign.push_back(Utf8Of(cp));
    }
  }
  flush();
  return result;
}

std::vector<Akshara> Syllabify(std::string_view word,
                               const LanguageConfig& cfg) {
  const auto chars = DecodeUtf8(word);
  if (chars.empty()) throw Error(ErrorCode::kEmptyWord, "empty word");
  const std::size_t n = chars.size();
  auto cls_at = [&](std::size_t i) {
    return i < n ? cfg.Classify(chars[i].cp) : CharClass::kOutOfBlock;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const CharClass c = cls_at(i);
    if (!IsScriptChar(c) || c == CharClass::kUnmapped) {
      throw Error(ErrorCode::kUnknownCodepoint,
                  FormatCodepoint(chars[i].cp) + " in '" + std::string(word) +
                      "'");
    }
  }

  std::vector<Akshara> out;
  std::size_t i = 0;
  while (i < n) {
    const std::size_t start = i;
    AksharaKind kind = AksharaKind::kOther;
    switch (cls_at(i)) {
      case CharClass::kConsonant: {
        kind = AksharaKind::kConsonantCluster;
        ++i;
        while (cls_at(i) == CharClass::kNukta) ++i;
        while (cls_at(i) == CharClass::kVirama) {
          std::size_t j = i + 1;
          while (cls_at(j) == CharClass::kJoiner) ++j;
          if (cls_at(j) != CharClass::kConsonant) {
            i = j;  // dead consonant: virama closes the akshara
            break;
          }
          i = j + 1;
          while (cls_at(i) == CharClass::kNukta) ++i;
        }
        if (cls_at(i) == CharClass::kVowelSign) ++i;
        break;
      }
      case CharClass::kIndependentVowel:
        kind = AksharaKind::kIndependentVowel;
        ++i;
        break;
      default:
        ++i;
        break;
    }
    while (cls_at(i) == CharClass::kNasalization ||
           cls_at(i) == CharClass::kJoiner) {
      ++i;
    }
    out.push_back({std::string(word.substr(chars[start].begin,
                                           chars[i - 1].end - chars[start].begin)),
                   kind});
  }
  return out;
}

std::vector<std::string> ToPhones(const std::vector<Akshara>& aksharas,
                                  const LanguageConfig& cfg) {
  std::vector<std::string> phones;
  for (std::size_t k = 0; k < aksharas.size(); ++k) {
    const bool word_final = k + 1 == aksharas.size();
    // A bare consonant still owes its inherent vowel.
    bool owes_vowel = false;
    for (Codepoint cp : ToCodepoints(aksharas[k].text)) {
      switch (cfg.Classify(cp)) {
        case CharClass::kConsonant:
          phones.push_back(cfg.consonant_map.at(cp));
          owes_vowel = true;
          break;
        case CharClass::kVirama:
          owes_vowel = false;
          break;
        case CharClass::kVowelSign:
          phones.push_back(cfg.vowel_sign_map.at(cp));
          owes_vowel = false;
          break;
        case CharClass::kIndependentVowel:
          phones.push_back(cfg.independent_vowel_map.at(cp));
          break;
        case CharClass::kNasalization:
          if (owes_vowel) phones.push_back(cfg.inherent_vowel);
          owes_vowel = false;
          phones.push_back(cfg.nasalization_marks.at(cp));
          break;
        default:
          break;
      }
    }
    // Word-final schwa deletion never strips the only syllable of a word.
    if (owes_vowel &&
        !(cfg.schwa_deletion && word_final && aksharas.size() > 1)) {
      phones.push_back(cfg.inherent_vowel);
    }
  }
  return phones;
}

std::vector<std::string> ToPhones(std::string_view word,
                                  const LanguageConfig& cfg) {
  return ToPhones(Syllabify(word, cfg), cfg);
}

Analysis AnalyzeSentence(const std::string& id, std::string_view text,
                         const LanguageConfig& cfg, ParseMode mode) {
  TokenizeResult tok;
  try {
    tok = Tokenize(text, cfg);
  } catch (const Error& e) {
    return Rejection{id, e.code(), e.detail()};
  }

  SentenceRecord rec;
  rec.id = id;
  rec.raw_text = std::string(text);

  if (!tok.digits.empty()) {
    rec.needs_normalization = true;
    rec.warnings.push_back("digits stripped: " +
                           std::to_string(tok.digits.size()));
  }
  if (!tok.foreign.empty()) {
    std::string joined;
    for (const auto& f : tok.foreign) joined += f;
    if (mode == ParseMode::kStrict) {
      return Rejection{id, ErrorCode::kUnknownCodepoint,
                       "out-of-script letters '" + joined + "'"};
    }
    rec.needs_normalization = true;
    rec.warnings.push_back("out-of-script letters stripped: '" + joined + "'");
  }

  std::vector<std::string> errors;
  ErrorCode first_error = ErrorCode::kUnknownCodepoint;
  for (std::string word : tok.words) {
    if (mode == ParseMode::kLenient) {
      std::string kept;
      for (const auto& d : DecodeUtf8(word)) {
        if (cfg.Classify(d.cp) == CharClass::kUnmapped) {
          rec.warnings.push_back("skipped " + FormatCodepoint(d.cp));
        } else {
          AppendUtf8(d.cp, &kept);
        }
      }
      word = std::move(kept);
      if (word.empty()) continue;
    }
    try {
      auto aks = Syllabify(word, cfg);
      auto phones = ToPhones(aks, cfg);
      std::vector<std::string> syl;
      syl.reserve(aks.size());
      for (auto& a : aks) syl.push_back(std::move(a.text));
      rec.syllable_count += static_cast<int>(syl.size());
      rec.syllables_per_word.push_back(std::move(syl));
      rec.phones.insert(rec.phones.end(), phones.begin(), phones.end());
      rec.words.push_back(std::move(word));
    } catch (const Error& e) {
      if (errors.empty()) first_error = e.code();
      errors.push_back(e.detail());
    }
  }
  if (!errors.empty()) {
    std::string detail;
    for (const auto& e : errors) {
      if (!detail.empty()) detail += "; ";
      detail += e;
    }
    return Rejection{id, first_error, detail};
  }
  if (rec.words.empty()) {
    return Rejection{id, ErrorCode::kEmptySentence, "no words in script"};
  }
  rec.word_count = static_cast<int>(rec.words.size());
  return rec;
}

std::vector<std::string> UniqueSyllables(const SentenceRecord& rec) {
  std::set<std::string> s;
  for (const auto& w : rec.syllables_per_word) s.insert(w.begin(), w.end());
  return {s.begin(), s.end()};
}

std::vector<std::string> UniquePhones(const SentenceRecord& rec) {
  std::set<std::string> s(rec.phones.begin(), rec.phones.end());
  return {s.begin(), s.end()};
}

}  // namespace ttscorpus
