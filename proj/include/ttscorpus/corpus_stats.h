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

#ifndef TTSCORPUS_CORPUS_STATS_H_
#define TTSCORPUS_CORPUS_STATS_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ttscorpus/script.h"

namespace ttscorpus {

// Frequency tables over a sentence pool. Ordered containers keep every export
// deterministic; Merge() is associative and commutative on disjoint id sets.
struct CorpusStats {
  std::map<std::string, std::int64_t> syllable_freq;
  std::map<std::string, std::int64_t> phone_freq;
  std::map<std::string, std::set<std::string>> postings;  // phone -> ids
  std::set<std::string> sentence_ids;

  std::int64_t sentence_count() const {
    return static_cast<std::int64_t>(sentence_ids.size());
  }

  // Throws kDuplicateSentenceId.
  void Accumulate(const SentenceRecord& rec);
  void Merge(const CorpusStats& other);

  bool operator==(const CorpusStats&) const = default;
};

CorpusStats Accumulate(CorpusStats stats, const SentenceRecord& rec);
CorpusStats Merge(CorpusStats a, const CorpusStats& b);

struct ZipfFit {
  double exponent = 0.0;   // s in f(r) ~ C * r^-s
  double intercept = 0.0;  // ln C
  double r_squared = 0.0;
  int ranks_used = 0;
};

// Ordinary least squares of ln(freq) on ln(rank) over syllables with count
// >= min_count, ranked by descending count (ties by label). Throws
// kInsufficientData when fewer than two syllables qualify.
ZipfFit FitZipf(const CorpusStats& stats, std::int64_t min_count = 2);
ZipfFit FitZipf(std::vector<std::int64_t> counts, std::int64_t min_count = 2);

struct WeakPhone {
  std::string phone;
  std::int64_t count = 0;
  std::int64_t sentences = 0;  // containing-sentence count

  bool operator==(const WeakPhone&) const = default;
};

// The k lowest-count phones, ascending by count, ties by label. Phones in
// `inventory` that never occur are included with count zero.
std::vector<WeakPhone> WeakPhones(const CorpusStats& stats, int k = 20,
                                  const std::set<std::string>& inventory = {});

// (unit, count, rank) rows, rank 1 = most frequent.
struct RankedUnit {
  std::string unit;
  std::int64_t count = 0;
  int rank = 0;
};
std::vector<RankedUnit> RankByFrequency(
    const std::map<std::string, std::int64_t>& freq);

}  // namespace ttscorpus

#endif  // TTSCORPUS_CORPUS_STATS_H_
