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

#include "ttscorpus/language_config.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "ttscorpus/error.h"

namespace ttscorpus {

namespace {

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitWs(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void Fail(int line_no, const std::string& msg) {
  throw Error(ErrorCode::kConfigError,
              "line " + std::to_string(line_no) + ": " + msg);
}

Codepoint ParseCodepoint(std::string_view tok, int line_no) {
  tok = Trim(tok);
  if (tok.size() < 3 || (tok[0] != 'U' && tok[0] != 'u') || tok[1] != '+') {
    Fail(line_no, "expected U+XXXX, got '" + std::string(tok) + "'");
  }
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(std::string(tok.substr(2)), &used, 16);
  } catch (const std::exception&) {
    Fail(line_no, "bad codepoint '" + std::string(tok) + "'");
  }
  if (used != tok.size() - 2 || value > 0x10FFFF) {
    Fail(line_no, "bad codepoint '" + std::string(tok) + "'");
  }
  return static_cast<Codepoint>(value);
}

CodepointRange ParseRange(std::string_view value, int line_no) {
  const auto dots = value.find("..");
  if (dots == std::string_view::npos) {
    Fail(line_no, "expected U+XXXX..U+YYYY");
  }
  CodepointRange r{ParseCodepoint(value.substr(0, dots), line_no),
                   ParseCodepoint(value.substr(dots + 2), line_no)};
  if (r.first > r.last) Fail(line_no, "empty codepoint range");
  return r;
}

bool ParseBool(std::string_view value, int line_no) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  Fail(line_no, "expected boolean, got '" + std::string(value) + "'");
}

}  // namespace

CharClass LanguageConfig::Classify(Codepoint cp) const {
  if (IsJoiner(cp)) return CharClass::kJoiner;
  if (full_stop_marks.count(cp)) return CharClass::kFullStop;
  if (digit_range && digit_range->Contains(cp)) return CharClass::kDigit;
  if (cp == virama) return CharClass::kVirama;
  if (nukta && cp == *nukta) return CharClass::kNukta;
  if (consonant_map.count(cp)) return CharClass::kConsonant;
  if (vowel_sign_map.count(cp)) return CharClass::kVowelSign;
  if (independent_vowel_map.count(cp)) return CharClass::kIndependentVowel;
  if (nasalization_marks.count(cp)) return CharClass::kNasalization;
  if (script_block.Contains(cp)) return CharClass::kUnmapped;
  return CharClass::kOutOfBlock;
}

void LanguageConfig::Validate() const {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kConfigError, msg);
  };
  if (language_id.empty()) fail("language_id is missing");
  if (script_block.first == 0 && script_block.last == 0) {
    fail("script_block is missing");
  }
  if (!script_block.Contains(virama)) fail("virama lies outside script_block");
  if (phone_inventory.empty()) fail("phones inventory is empty");
  if (inherent_vowel.empty() || !phone_inventory.count(inherent_vowel)) {
    fail("inherent_vowel '" + inherent_vowel + "' not in phone inventory");
  }
  const std::pair<const char*, const std::map<Codepoint, std::string>*>
      maps[] = {{"consonants", &consonant_map},
                {"vowel_signs", &vowel_sign_map},
                {"independent_vowels", &independent_vowel_map},
                {"nasalization_marks", &nasalization_marks}};
  std::set<Codepoint> seen;
  for (const auto& [name, map] : maps) {
    for (const auto& [cp, label] : *map) {
      const std::string where =
          std::string(name) + " entry " + FormatCodepoint(cp);
      // Nasalization marks may live outside the block (shared signs).
      if (map != &nasalization_marks && !script_block.Contains(cp)) {
        fail(where + " lies outside script_block");
      }
      if (cp == virama) fail(where + " is the virama");
      if (nukta && cp == *nukta) fail(where + " is the nukta");
      if (label.empty()) fail(where + " has an empty phone label");
      if (!phone_inventory.count(label)) {
        fail(where + " uses undeclared phone '" + label + "'");
      }
      if (!seen.insert(cp).second) fail(where + " is mapped twice");
    }
  }
  if (consonant_map.empty()) fail("no consonants declared");
}

LanguageConfig ParseLanguageConfig(std::string_view text) {
  LanguageConfig cfg;
  std::map<Codepoint, std::string>* section = nullptr;
  std::set<std::string> keys_seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') Fail(line_no, "unterminated section header");
      const auto name = line.substr(1, line.size() - 2);
      if (name == "consonants") {
        section = &cfg.consonant_map;
      } else if (name == "vowel_signs") {
        section = &cfg.vowel_sign_map;
      } else if (name == "independent_vowels") {
        section = &cfg.independent_vowel_map;
      } else if (name == "nasalization_marks") {
        section = &cfg.nasalization_marks;
      } else {
        Fail(line_no, "unknown section [" + std::string(name) + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) Fail(line_no, "expected key = value");
    const auto key = Trim(line.substr(0, eq));
    const auto value = Trim(line.substr(eq + 1));
    if (section != nullptr) {
      const Codepoint cp = ParseCodepoint(key, line_no);
      if (value.empty()) Fail(line_no, "empty phone label");
      if (!section->emplace(cp, std::string(value)).second) {
        Fail(line_no, FormatCodepoint(cp) + " repeated in section");
      }
      continue;
    }
    if (!keys_seen.insert(std::string(key)).second) {
      Fail(line_no, "duplicate key '" + std::string(key) + "'");
    }
    if (key == "language_id") {
      cfg.language_id = value;
    } else if (key == "script_block") {
      cfg.script_block = ParseRange(value, line_no);
    } else if (key == "virama") {
      cfg.virama = ParseCodepoint(value, line_no);
    } else if (key == "nukta") {
      cfg.nukta = ParseCodepoint(value, line_no);
    } else if (key == "inherent_vowel") {
      cfg.inherent_vowel = value;
    } else if (key == "schwa_deletion") {
      cfg.schwa_deletion = ParseBool(value, line_no);
    } else if (key == "full_stop_marks") {
      for (const auto& tok : SplitWs(value)) {
        cfg.full_stop_marks.insert(ParseCodepoint(tok, line_no));
      }
    } else if (key == "digit_range") {
      cfg.digit_range = ParseRange(value, line_no);
    } else if (key == "phones") {
      for (auto& tok : SplitWs(value)) cfg.phone_inventory.insert(tok);
    } else {
      Fail(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  cfg.Validate();
  return cfg;
}

LanguageConfig LoadLanguageConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kConfigError, "cannot open config " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseLanguageConfig(buf.str());
}

}  // namespace ttscorpus
