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

#include <algorithm>
#include <cmath>

namespace ttscorpus {

void CorpusStats::Accumulate(const SentenceRecord& rec) {
  if (!sentence_ids.insert(rec.id).second) {
    throw Error(ErrorCode::kDuplicateSentenceId, rec.id);
  }
  for (const auto& word : rec.syllables_per_word) {
    for (const auto& syl : word) ++syllable_freq[syl];
  }
  for (const auto& ph : rec.phones) {
    ++phone_freq[ph];
    postings[ph].insert(rec.id);
  }
}

void CorpusStats::Merge(const CorpusStats& other) {
  for (const auto& id : other.sentence_ids) {
    if (sentence_ids.count(id)) {
      throw Error(ErrorCode::kDuplicateSentenceId, id);
    }
  }
  sentence_ids.insert(other.sentence_ids.begin(), other.sentence_ids.end());
  for (const auto& [k, v] : other.syllable_freq) syllable_freq[k] += v;
  for (const auto& [k, v] : other.phone_freq) phone_freq[k] += v;
  for (const auto& [k, ids] : other.postings) {
    postings[k].insert(ids.begin(), ids.end());
  }
}

CorpusStats Accumulate(CorpusStats stats, const SentenceRecord& rec) {
  stats.Accumulate(rec);
  return stats;
}

CorpusStats Merge(CorpusStats a, const CorpusStats& b) {
  a.Merge(b);
  return a;
}

std::vector<RankedUnit> RankByFrequency(
    const std::map<std::string, std::int64_t>& freq) {
  std::vector<RankedUnit> rows;
  rows.reserve(freq.size());
  for (const auto& [unit, count] : freq) rows.push_back({unit, count, 0});
  std::stable_sort(rows.begin(), rows.end(),
                   [](const RankedUnit& a, const RankedUnit& b) {
                     return a.count > b.count;
                   });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].rank = static_cast<int>(i + 1);
  }
  return rows;
}

ZipfFit FitZipf(std::vector<std::int64_t> counts, std::int64_t min_count) {
  std::erase_if(counts, [&](std::int64_t c) { return c < min_count || c <= 0; });
  std::sort(counts.begin(), counts.end(), std::greater<>());
  const std::size_t n = counts.size();
  if (n < 2) {
    throw Error(ErrorCode::kInsufficientData,
                std::to_string(n) + " syllable(s) with count >= " +
                    std::to_string(min_count));
  }
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += std::log(static_cast<double>(i + 1));
    mean_y += std::log(static_cast<double>(counts[i]));
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(static_cast<double>(i + 1)) - mean_x;
    const double dy = std::log(static_cast<double>(counts[i])) - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const double slope = sxy / sxx;
  ZipfFit fit;
  fit.exponent = -slope;
  fit.intercept = mean_y - slope * mean_x;
  // A flat distribution is fit exactly by a horizontal line.
  fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0)
                            : 1.0;
  fit.ranks_used = static_cast<int>(n);
  return fit;
}

ZipfFit FitZipf(const CorpusStats& stats, std::int64_t min_count) {
  std::vector<std::int64_t> counts;
  counts.reserve(stats.syllable_freq.size());
  for (const auto& [unit, c] : stats.syllable_freq) counts.push_back(c);
  return FitZipf(std::move(counts), min_count);
}

std::vector<WeakPhone> WeakPhones(const CorpusStats& stats, int k,
                                  const std::set<std::string>& inventory) {
  std::map<std::string, WeakPhone> table;
  for (const auto& ph : inventory) table[ph] = {ph, 0, 0};
  for (const auto& [ph, count] : stats.phone_freq) {
    auto it = stats.postings.find(ph);
    table[ph] = {ph, count,
                 it == stats.postings.end()
                     ? 0
                     : static_cast<std::int64_t>(it->second.size())};
  }
  std::vector<WeakPhone> rows;
  rows.reserve(table.size());
  for (auto& [ph, row] : table) rows.push_back(std::move(row));
  // Map iteration is already label-ordered, so a stable sort on count
  // implements the lexicographic tie rule.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const WeakPhone& a, const WeakPhone& b) {
                     return a.count < b.count;
                   });
  if (k >= 0 && rows.size() > static_cast<std::size_t>(k)) rows.resize(k);
  return rows;
}

}  // namespace ttscorpus
