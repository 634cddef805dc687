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

#ifndef TTSCORPUS_RATINGS_H_
#define TTSCORPUS_RATINGS_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ttscorpus {

enum class Condition { kGroundTruth, kSynthesized };
std::string_view ConditionName(Condition c);

struct Rating {
  std::string evaluator_id;
  std::string system_id;
  std::string item_id;
  int score = 0;  // 1..5
  Condition condition = Condition::kSynthesized;
};

// CSV with header `evaluator,system,item,condition,score`. Condition accepts
// ground-truth/gt and synthesized/syn. Throws kParseError with a line number.
std::vector<Rating> ParseRatingsCsv(std::string_view text);
std::vector<Rating> LoadRatingsCsv(const std::string& path);

enum class Metric { kMcd, kMos, kDmos };
std::string_view MetricName(Metric m);

struct MetricReport {
  std::string system;
  Metric metric = Metric::kMos;
  double mean = 0.0;
  double std = 0.0;
  int n = 0;         // evaluators for MOS/DMOS, file pairs for MCD
  int n_scores = 0;  // individual values behind the mean
};

// Mean and population std over every score of `system`.
// Throws kNoRatings.
MetricReport MosAggregate(std::span<const Rating> ratings,
                          const std::string& system);

// DMOS_e = 5 * mean(syn) / mean(gt) per evaluator of `system`.
// Throws kNoRatings, or kMissingCondition naming the first evaluator (by id)
// lacking either condition.
std::map<std::string, double> DmosPerEvaluator(std::span<const Rating> ratings,
                                               const std::string& system);
MetricReport DmosAggregate(std::span<const Rating> ratings,
                           const std::string& system);

// One report per distinct system id, in id order.
std::vector<MetricReport> MosAggregateAll(std::span<const Rating> ratings);
std::vector<MetricReport> DmosAggregateAll(std::span<const Rating> ratings);

// MCD summary over per-pair values. Throws kEmptyInput.
MetricReport McdSummary(const std::string& system,
                        std::span<const double> per_pair);

// Plain-text table, one row per report: "system  metric  4.58±0.57 (10)".
std::string RenderMetricTable(std::span<const MetricReport> reports);

}  // namespace ttscorpus

#endif  // TTSCORPUS_RATINGS_H_
