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

#include "ttscorpus/selector.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ttscorpus {

void SelectionConstraints::Validate() const {
  if (min_words < 1 || min_words > max_words) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 1 <= min_words <= max_words");
  }
  if (max_syllables_per_word < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "max_syllables_per_word must be >= 1");
  }
}

void AugmentationPolicy::Validate() const {
  if (weak_k < 1 || target_sentences_per_weak_phone < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "weak_k and target_sentences_per_weak_phone must be >= 1");
  }
}

std::string_view FilterReasonName(FilterReason r) {
  switch (r) {
    case FilterReason::kTooShort: return "TooShort";
    case FilterReason::kTooLong: return "TooLong";
    case FilterReason::kWordTooLong: return "WordTooLong";
  }
  return "Unknown";
}

std::optional<FilterReason> CheckConstraints(const SentenceRecord& rec,
                                             const SelectionConstraints& c) {
  if (rec.word_count < c.min_words) return FilterReason::kTooShort;
  if (rec.word_count > c.max_words) return FilterReason::kTooLong;
  for (const auto& w : rec.syllables_per_word) {
    if (static_cast<int>(w.size()) > c.max_syllables_per_word) {
      return FilterReason::kWordTooLong;
    }
  }
  return std::nullopt;
}

FilterResult Filter(const std::vector<SentenceRecord>& pool,
                    const SelectionConstraints& c) {
  c.Validate();
  FilterResult out;
  for (const auto& rec : pool) {
    if (auto why = CheckConstraints(rec, c)) {
      out.rejected.push_back({rec.id, *why});
    } else {
      out.accepted.push_back(rec);
    }
  }
  return out;
}

namespace {

// Pool with syllables interned to dense ids.
struct IndexedPool {
  std::vector<std::vector<int>> syllables;  // unique, per sentence
  std::vector<std::string> names;           // id -> syllable text
};

IndexedPool IndexSyllables(const std::vector<SentenceRecord>& pool) {
  IndexedPool ip;
  std::map<std::string, int> ids;
  for (const auto& rec : pool) {
    for (const auto& s : UniqueSyllables(rec)) ids.emplace(s, 0);
  }
  int next = 0;
  for (auto& [s, id] : ids) {
    id = next++;
    ip.names.push_back(s);
  }
  ip.syllables.reserve(pool.size());
  for (const auto& rec : pool) {
    std::vector<int> v;
    for (const auto& s : UniqueSyllables(rec)) v.push_back(ids.at(s));
    ip.syllables.push_back(std::move(v));
  }
  return ip;
}

struct Candidate {
  int gain = 0;
  int index = -1;
};

// True when `a` should be picked over `b`.
bool Better(const Candidate& a, const Candidate& b,
            const std::vector<SentenceRecord>& pool) {
  if (b.index < 0) return a.index >= 0;
  if (a.index < 0) return false;
  if (a.gain != b.gain) return a.gain > b.gain;
  const auto& ra = pool[a.index];
  const auto& rb = pool[b.index];
  if (ra.syllable_count != rb.syllable_count) {
    return ra.syllable_count < rb.syllable_count;
  }
  if (ra.id != rb.id) return ra.id < rb.id;
  return a.index < b.index;
}

int Gain(const std::vector<int>& syl, const std::vector<char>& covered) {
  int g = 0;
  for (int s : syl) g += covered[s] ? 0 : 1;
  return g;
}

Candidate BestSerial(const std::vector<SentenceRecord>& pool,
                     const IndexedPool& ip, const std::vector<char>& covered,
                     const std::vector<char>& taken) {
  Candidate best;
  for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
    if (taken[i]) continue;
    Candidate c{Gain(ip.syllables[i], covered), i};
    if (Better(c, best, pool)) best = c;
  }
  return best;
}

Candidate BestParallel(const std::vector<SentenceRecord>& pool,
                       const IndexedPool& ip, const std::vector<char>& covered,
                       const std::vector<char>& taken) {
  Candidate best;
  const int n = static_cast<int>(pool.size());
#pragma omp parallel
  {
    Candidate local;
#pragma omp for schedule(static) nowait
    for (int i = 0; i < n; ++i) {
      if (taken[i]) continue;
      Candidate c{Gain(ip.syllables[i], covered), i};
      if (Better(c, local, pool)) local = c;
    }
#pragma omp critical(ttscorpus_greedy_best)
    if (Better(local, best, pool)) best = local;
  }
  return best;
}

template <typename PickBest>
SelectionResult GreedyImpl(const std::vector<SentenceRecord>& pool,
                           StopCriterion stop, PickBest pick_best) {
  if (pool.empty()) throw Error(ErrorCode::kEmptyPool, "no accepted sentences");
  if (const auto* b = std::get_if<Budget>(&stop); b && b->sentences < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative budget");
  }
  if (const auto* t = std::get_if<TargetCoverage>(&stop);
      t && !(t->fraction >= 0.0 && t->fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "target coverage must lie in [0, 1]");
  }

  const IndexedPool ip = IndexSyllables(pool);
  const auto inventory = static_cast<std::int64_t>(ip.names.size());
  std::vector<char> covered(ip.names.size(), 0);
  std::vector<char> taken(pool.size(), 0);
  std::int64_t n_covered = 0;

  SelectionResult result;
  result.inventory_size = inventory;

  auto done = [&] {
    if (const auto* b = std::get_if<Budget>(&stop)) {
      return static_cast<int>(result.selected_ids.size()) >= b->sentences;
    }
    const double f = std::get<TargetCoverage>(stop).fraction;
    const auto needed = static_cast<std::int64_t>(
        std::ceil(f * static_cast<double>(inventory) - 1e-9));
    return n_covered >= needed;
  };

  while (!done()) {
    const Candidate best = pick_best(pool, ip, covered, taken);
    if (best.index < 0 || best.gain == 0) break;
    taken[best.index] = 1;
    result.selected_ids.push_back(pool[best.index].id);
    for (int s : ip.syllables[best.index]) {
      if (!covered[s]) {
        covered[s] = 1;
        ++n_covered;
        result.covered_syllables.insert(ip.names[s]);
      }
    }
  }

  result.coverage_ratio =
      inventory > 0 ? static_cast<double>(n_covered) / inventory : 0.0;
  if (const auto* b = std::get_if<Budget>(&stop)) {
    if (static_cast<int>(result.selected_ids.size()) < b->sentences) {
      result.warnings.push_back(
          "CoverageStalled: " + std::to_string(result.selected_ids.size()) +
          " of " + std::to_string(b->sentences) +
          " budgeted sentences selected; no remaining sentence adds a new "
          "syllable");
    }
  } else if (n_covered == inventory &&
             std::get<TargetCoverage>(stop).fraction >= 1.0) {
    result.warnings.push_back(
        "CoverageStalled: all " + std::to_string(inventory) +
        " pool syllables covered after " +
        std::to_string(result.selected_ids.size()) + " sentences");
  }
  return result;
}

}  // namespace

SelectionResult GreedySelect(const std::vector<SentenceRecord>& pool,
                             StopCriterion stop) {
  return GreedyImpl(pool, stop, BestParallel);
}

SelectionResult GreedySelectSerial(const std::vector<SentenceRecord>& pool,
                                   StopCriterion stop) {
  return GreedyImpl(pool, stop, BestSerial);
}

CorpusStats StatsOf(const std::vector<SentenceRecord>& pool,
                    const std::vector<std::string>& ids) {
  std::unordered_map<std::string, const SentenceRecord*> by_id;
  for (const auto& r : pool) by_id.emplace(r.id, &r);
  CorpusStats stats;
  for (const auto& id : ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown sentence id " + id);
    }
    stats.Accumulate(*it->second);
  }
  return stats;
}

SelectionResult AugmentWeak(SelectionResult selection,
                            const std::vector<SentenceRecord>& pool,
                            const CorpusStats& selection_stats,
                            const AugmentationPolicy& policy) {
  policy.Validate();
  std::set<std::string> pool_phones;
  for (const auto& r : pool) pool_phones.insert(r.phones.begin(), r.phones.end());

  const auto weak =
      WeakPhones(selection_stats, policy.weak_k, pool_phones);
  const auto target =
      static_cast<std::int64_t>(policy.target_sentences_per_weak_phone);

  std::map<std::string, std::int64_t> have;  // weak phone -> sentences
  std::map<std::string, std::size_t> slot;   // weak phone -> additions row
  for (const auto& w : weak) {
    have[w.phone] = w.sentences;
    slot[w.phone] = selection.augmentation_additions.size();
    selection.augmentation_additions.push_back({w.phone, {}});
  }

  std::set<std::string> selected(selection.selected_ids.begin(),
                                 selection.selected_ids.end());
  // Weak phones contained by each unselected candidate.
  std::vector<int> candidates;
  std::vector<std::vector<std::string>> cand_weak(pool.size());
  for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
    if (selected.count(pool[i].id)) continue;
    for (const auto& ph : UniquePhones(pool[i])) {
      if (have.count(ph)) cand_weak[i].push_back(ph);
    }
    if (!cand_weak[i].empty()) candidates.push_back(i);
  }

  for (;;) {
    int best = -1;
    int best_score = 0;
    for (int i : candidates) {
      if (selected.count(pool[i].id)) continue;
      int score = 0;
      for (const auto& ph : cand_weak[i]) score += have[ph] < target ? 1 : 0;
      if (score == 0) continue;
      bool better = best < 0 || score > best_score;
      if (!better && score == best_score) {
        const auto& a = pool[i];
        const auto& b = pool[best];
        better = a.syllable_count != b.syllable_count
                     ? a.syllable_count < b.syllable_count
                     : a.id < b.id;
      }
      if (better) {
        best = i;
        best_score = score;
      }
    }
    if (best < 0) break;
    const auto& rec = pool[best];
    selected.insert(rec.id);
    selection.selected_ids.push_back(rec.id);
    for (const auto& ph : cand_weak[best]) {
      if (have[ph] < target) {
        selection.augmentation_additions[slot[ph]].added_ids.push_back(rec.id);
      }
      ++have[ph];
    }
    for (const auto& s : UniqueSyllables(rec)) {
      selection.covered_syllables.insert(s);
    }
  }

  for (const auto& w : weak) {
    if (have[w.phone] < target) {
      selection.warnings.push_back("PoolExhausted(" + w.phone + "," +
                                   std::to_string(have[w.phone]) + ")");
    }
  }
  if (selection.inventory_size > 0) {
    selection.coverage_ratio =
        static_cast<double>(selection.covered_syllables.size()) /
        static_cast<double>(selection.inventory_size);
  }
  return selection;
}

}  // namespace ttscorpus
