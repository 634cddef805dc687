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

#ifndef TTSCORPUS_SELECTOR_H_
#define TTSCORPUS_SELECTOR_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ttscorpus/corpus_stats.h"
#include "ttscorpus/script.h"

namespace ttscorpus {

struct SelectionConstraints {
  int min_words = 5;
  int max_words = 15;
  int max_syllables_per_word = 5;

  void Validate() const;
};

struct AugmentationPolicy {
  int weak_k = 20;
  int target_sentences_per_weak_phone = 50;

  void Validate() const;
};

enum class FilterReason { kTooShort, kTooLong, kWordTooLong };
std::string_view FilterReasonName(FilterReason r);

struct FilterRejection {
  std::string id;
  FilterReason reason;
};

struct FilterResult {
  std::vector<SentenceRecord> accepted;
  std::vector<FilterRejection> rejected;
};

// Returns the first violated rule, in the order short / long / word length.
std::optional<FilterReason> CheckConstraints(const SentenceRecord& rec,
                                             const SelectionConstraints& c);
FilterResult Filter(const std::vector<SentenceRecord>& pool,
                    const SelectionConstraints& c);

// Exactly one stopping criterion: a sentence budget or a target fraction of
// the pool's syllable inventory.
struct Budget {
  int sentences = 0;
};
struct TargetCoverage {
  double fraction = 1.0;
};
using StopCriterion = std::variant<Budget, TargetCoverage>;

struct PhoneAdditions {
  std::string phone;
  std::vector<std::string> added_ids;

  bool operator==(const PhoneAdditions&) const = default;
};

struct SelectionResult {
  std::vector<std::string> selected_ids;  // selection order
  std::set<std::string> covered_syllables;
  std::int64_t inventory_size = 0;  // distinct syllables in the pool
  double coverage_ratio = 0.0;
  std::vector<PhoneAdditions> augmentation_additions;
  std::vector<std::string> warnings;

  bool operator==(const SelectionResult&) const = default;
};

// Greedy maximum-marginal-coverage selection. Ties prefer fewer syllables,
// then the smaller id. Candidate gains are evaluated with OpenMP; the serial
// variant is the reference the parallel one is tested against. Throws
// kEmptyPool.
SelectionResult GreedySelect(const std::vector<SentenceRecord>& pool,
                             StopCriterion stop);
SelectionResult GreedySelectSerial(const std::vector<SentenceRecord>& pool,
                                   StopCriterion stop);

// Adds pool sentences until each of the weak_k rarest phones of the current
// selection occurs in at least `target` selected sentences (selected and
// added sentences both count), or the pool runs out for that phone.
SelectionResult AugmentWeak(SelectionResult selection,
                            const std::vector<SentenceRecord>& pool,
                            const CorpusStats& selection_stats,
                            const AugmentationPolicy& policy);

// Stats over the records named in `ids`, in that order.
CorpusStats StatsOf(const std::vector<SentenceRecord>& pool,
                    const std::vector<std::string>& ids);

}  // namespace ttscorpus

#endif  // TTSCORPUS_SELECTOR_H_
