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

#include "ttscorpus/corpus_stats.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_util.h"

namespace ttscorpus {
namespace {

using testing::FakeRecord;

TEST(AccumulateTest, CountsEachSyllableOnce) {
  CorpusStats s;
  s.Accumulate(testing::Record("a", "भारत"));
  EXPECT_EQ(s.syllable_freq.at("भा"), 1);
  EXPECT_EQ(s.syllable_freq.at("र"), 1);
  EXPECT_EQ(s.syllable_freq.at("त"), 1);
  EXPECT_EQ(s.sentence_count(), 1);
}

TEST(AccumulateTest, SameTextTwiceDoublesCounts) {
  CorpusStats s;
  s.Accumulate(testing::Record("a", "भारत"));
  s.Accumulate(testing::Record("b", "भारत"));
  EXPECT_EQ(s.syllable_freq.at("भा"), 2);
  EXPECT_EQ(s.postings.at("bh").size(), 2u);
}

TEST(AccumulateTest, DuplicateIdThrows) {
  CorpusStats s;
  s.Accumulate(testing::Record("a", "भारत"));
  try {
    s.Accumulate(testing::Record("a", "देश"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateSentenceId);
  }
}

TEST(AccumulateTest, TableInvariants) {
  CorpusStats s;
  std::int64_t syllables = 0;
  for (const auto& [id, text] :
       std::vector<std::pair<std::string, std::string>>{
           {"1", "नमस्ते भारत"}, {"2", "ममता माँ"}, {"3", "कक्षा में बच्चे"}}) {
    const auto r = testing::Record(id, text);
    syllables += r.syllable_count;
    s.Accumulate(r);
  }
  std::int64_t total = 0;
  for (const auto& [k, v] : s.syllable_freq) total += v;
  EXPECT_EQ(total, syllables);
  for (const auto& [ph, ids] : s.postings) {
    EXPECT_GE(s.phone_freq.at(ph), static_cast<std::int64_t>(ids.size()));
  }
}

TEST(MergeTest, AssociativeCommutativeWithIdentity) {
  std::mt19937 rng(3);
  std::vector<SentenceRecord> recs;
  for (int i = 0; i < 60; ++i) {
    std::string text;
    for (int w = 0; w < 4; ++w) {
      text += testing::RandomWord(testing::Hindi(), rng) + " ";
    }
    recs.push_back(testing::Record("r" + std::to_string(i), text));
  }
  CorpusStats whole;
  for (const auto& r : recs) whole.Accumulate(r);

  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(recs.begin(), recs.end(), rng);
    const int shards = 1 + trial % 5;
    std::vector<CorpusStats> parts(shards);
    for (std::size_t i = 0; i < recs.size(); ++i) {
      parts[rng() % shards].Accumulate(recs[i]);
    }
    CorpusStats left;
    for (const auto& p : parts) left = Merge(left, p);
    CorpusStats right;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      right = Merge(*it, right);
    }
    EXPECT_EQ(left, whole);
    EXPECT_EQ(right, whole);
  }
  EXPECT_EQ(Merge(whole, CorpusStats{}), whole);
  EXPECT_EQ(Merge(CorpusStats{}, whole), whole);
}

TEST(MergeTest, OverlappingIdsThrow) {
  CorpusStats a, b;
  a.Accumulate(testing::Record("x", "भारत"));
  b.Accumulate(testing::Record("x", "देश"));
  EXPECT_THROW(a.Merge(b), Error);
}

TEST(ZipfTest, RecoversUnitExponent) {
  std::vector<std::int64_t> counts;
  for (int r = 1; r <= 100; ++r) counts.push_back(std::lround(10000.0 / r));
  const ZipfFit fit = FitZipf(counts);
  EXPECT_NEAR(fit.exponent, 1.0, 0.02);
  EXPECT_GT(fit.r_squared, 0.999);
  EXPECT_EQ(fit.ranks_used, 100);
}

TEST(ZipfTest, FlatDistributionHasZeroExponent) {
  const ZipfFit fit = FitZipf(std::vector<std::int64_t>(30, 7));
  EXPECT_NEAR(fit.exponent, 0.0, 1e-12);
  EXPECT_GE(fit.r_squared, 0.0);
  EXPECT_LE(fit.r_squared, 1.0);
}

TEST(ZipfTest, InsufficientData) {
  try {
    FitZipf(std::vector<std::int64_t>{42});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientData);
  }
  // min_count drops the hapax tail.
  EXPECT_THROW(FitZipf(std::vector<std::int64_t>{5, 1, 1, 1}), Error);
}

TEST(ZipfTest, FromStats) {
  CorpusStats s;
  for (int r = 1; r <= 20; ++r) {
    for (int k = 0; k < 200 / r; ++k) {
      s.syllable_freq["u" + std::to_string(r)] += 1;
    }
  }
  const ZipfFit fit = FitZipf(s);
  EXPECT_NEAR(fit.exponent, 1.0, 0.05);
}

std::vector<std::pair<std::string, std::int64_t>> Pairs(
    const std::vector<WeakPhone>& w) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  for (const auto& x : w) out.emplace_back(x.phone, x.count);
  return out;
}

TEST(WeakPhonesTest, LowestCountsAscending) {
  CorpusStats s;
  s.phone_freq = {{"a", 10}, {"b", 2}, {"c", 5}};
  EXPECT_EQ(Pairs(WeakPhones(s, 2)),
            (std::vector<std::pair<std::string, std::int64_t>>{{"b", 2},
                                                               {"c", 5}}));
  EXPECT_EQ(WeakPhones(s, 20).size(), 3u);
}

TEST(WeakPhonesTest, TiesByLabel) {
  CorpusStats s;
  s.phone_freq = {{"y", 4}, {"x", 4}};
  const auto w = WeakPhones(s, 1);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].phone, "x");
}

TEST(WeakPhonesTest, ReportsContainingSentencesAndInventoryGaps) {
  CorpusStats s;
  s.Accumulate(FakeRecord("1", {"x"}, {"p", "p", "q"}));
  s.Accumulate(FakeRecord("2", {"y"}, {"q"}));
  const auto w = WeakPhones(s, 5, {"p", "q", "z"});
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], (WeakPhone{"z", 0, 0}));
  EXPECT_EQ(w[1], (WeakPhone{"p", 2, 1}));
  EXPECT_EQ(w[2], (WeakPhone{"q", 2, 2}));
}

TEST(RankTest, DescendingWithLabelTies) {
  const auto r = RankByFrequency({{"b", 3}, {"a", 3}, {"c", 9}});
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].unit, "c");
  EXPECT_EQ(r[1].unit, "a");
  EXPECT_EQ(r[2].unit, "b");
  EXPECT_EQ(r[2].rank, 3);
}

}  // namespace
}  // namespace ttscorpus
