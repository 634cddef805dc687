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

#include <gtest/gtest.h>

#include "test_util.h"
#include "ttscorpus/error.h"

namespace ttscorpus {
namespace {

constexpr char kMini[] = R"(
# tiny Devanagari subset
language_id = mini
script_block = U+0900..U+097F
virama = U+094D
inherent_vowel = a
schwa_deletion = false
phones = a aa k t n

[consonants]
U+0915 = k   # ka
U+0924 = t
U+0928 = n
[vowel_signs]
U+093E = aa
[independent_vowels]
U+0905 = a
)";

ErrorCode CodeOf(const std::string& text) {
  try {
    ParseLanguageConfig(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;  // sentinel: parsed fine
}

TEST(LanguageConfigTest, ParsesMinimalConfig) {
  const LanguageConfig cfg = ParseLanguageConfig(kMini);
  EXPECT_EQ(cfg.language_id, "mini");
  EXPECT_EQ(cfg.virama, 0x94Du);
  EXPECT_EQ(cfg.consonant_map.at(0x915), "k");
  EXPECT_EQ(cfg.Classify(0x915), CharClass::kConsonant);
  EXPECT_EQ(cfg.Classify(0x93E), CharClass::kVowelSign);
  EXPECT_EQ(cfg.Classify(0x905), CharClass::kIndependentVowel);
  EXPECT_EQ(cfg.Classify(0x94D), CharClass::kVirama);
  EXPECT_EQ(cfg.Classify(0x916), CharClass::kUnmapped);
  EXPECT_EQ(cfg.Classify(U'x'), CharClass::kOutOfBlock);
  EXPECT_EQ(cfg.Classify(0x200C), CharClass::kJoiner);
}

TEST(LanguageConfigTest, RejectsBrokenInvariants) {
  // Phone outside the inventory.
  EXPECT_EQ(CodeOf(std::string(kMini) + "U+0916 = kh\n"),
            ErrorCode::kConfigError);
  // Codepoint outside the block.
  EXPECT_EQ(CodeOf(std::string(kMini) + "U+0A05 = a\n"), ErrorCode::kConfigError);
  // Virama mapped as a vowel.
  EXPECT_EQ(CodeOf(std::string(kMini) + "U+094D = a\n"), ErrorCode::kConfigError);
  // Empty label.
  EXPECT_EQ(CodeOf(std::string(kMini) + "U+0906 =\n"), ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf("language_id = x\n"), ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf(std::string(kMini) + "[bogus]\n"), ErrorCode::kConfigError);
  EXPECT_EQ(CodeOf("virama = U+ZZ\n"), ErrorCode::kConfigError);
}

TEST(LanguageConfigTest, MissingFileIsConfigError) {
  try {
    LoadLanguageConfig("/nonexistent/lang.cfg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfigError);
  }
}

TEST(LanguageConfigTest, ShippedConfigsValidate) {
  for (const char* lang : {"hindi", "bengali", "tamil", "telugu", "kannada"}) {
    SCOPED_TRACE(lang);
    const LanguageConfig& cfg = testing::Config(lang);
    EXPECT_NO_THROW(cfg.Validate());
    // Tamil: 18 native consonants plus the grantha letters.
    EXPECT_GE(cfg.consonant_map.size(), 18u);
  }
  EXPECT_TRUE(testing::Hindi().schwa_deletion);
  EXPECT_FALSE(testing::Config("tamil").schwa_deletion);
}

}  // namespace
}  // namespace ttscorpus
