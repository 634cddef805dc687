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

#include "ttscorpus/ratings.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "ttscorpus/error.h"
#include "ttscorpus/summary.h"

namespace ttscorpus {

namespace {

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> SplitCsv(std::string_view line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    out.push_back(Trim(line.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string LineError(int line_no, const std::string& what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

}  // namespace

std::string_view ConditionName(Condition c) {
  return c == Condition::kGroundTruth ? "ground-truth" : "synthesized";
}

std::string_view MetricName(Metric m) {
  switch (m) {
    case Metric::kMcd: return "MCD";
    case Metric::kMos: return "MOS";
    case Metric::kDmos: return "DMOS";
  }
  return "MOS";
}

std::vector<Rating> ParseRatingsCsv(std::string_view text) {
  std::vector<Rating> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto f = SplitCsv(line);
    if (!header_seen) {
      static const std::vector<std::string> kHeader = {
          "evaluator", "system", "item", "condition", "score"};
      if (f != kHeader) {
        throw Error(ErrorCode::kParseError,
                    LineError(line_no, "expected header "
                                       "evaluator,system,item,condition,score"));
      }
      header_seen = true;
      continue;
    }
    if (f.size() != 5) {
      throw Error(ErrorCode::kParseError,
                  LineError(line_no, "expected 5 fields, got " +
                                         std::to_string(f.size())));
    }
    Rating r;
    r.evaluator_id = f[0];
    r.system_id = f[1];
    r.item_id = f[2];
    if (r.evaluator_id.empty() || r.system_id.empty()) {
      throw Error(ErrorCode::kParseError,
                  LineError(line_no, "empty evaluator or system"));
    }
    if (f[3] == "ground-truth" || f[3] == "gt") {
      r.condition = Condition::kGroundTruth;
    } else if (f[3] == "synthesized" || f[3] == "syn") {
      r.condition = Condition::kSynthesized;
    } else {
      throw Error(ErrorCode::kParseError,
                  LineError(line_no, "unknown condition '" + f[3] + "'"));
    }
    if (f[4].size() != 1 || f[4][0] < '1' || f[4][0] > '5') {
      throw Error(ErrorCode::kParseError,
                  LineError(line_no, "score must be an integer 1-5, got '" +
                                         f[4] + "'"));
    }
    r.score = f[4][0] - '0';
    out.push_back(std::move(r));
  }
  if (!header_seen) {
    throw Error(ErrorCode::kParseError, "missing header line");
  }
  return out;
}

std::vector<Rating> LoadRatingsCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseRatingsCsv(ss.str());
}

MetricReport MosAggregate(std::span<const Rating> ratings,
                          const std::string& system) {
  std::vector<double> scores;
  std::set<std::string> evaluators;
  for (const auto& r : ratings) {
    if (r.system_id != system) continue;
    scores.push_back(r.score);
    evaluators.insert(r.evaluator_id);
  }
  if (scores.empty()) {
    throw Error(ErrorCode::kNoRatings, "no ratings for system " + system);
  }
  const MeanStd ms = ComputeMeanStd(scores);
  MetricReport rep;
  rep.system = system;
  rep.metric = Metric::kMos;
  rep.mean = ms.mean;
  rep.std = ms.std;
  rep.n = static_cast<int>(evaluators.size());
  rep.n_scores = ms.n;
  return rep;
}

std::map<std::string, double> DmosPerEvaluator(std::span<const Rating> ratings,
                                               const std::string& system) {
  struct Sums {
    double gt = 0.0, syn = 0.0;
    int n_gt = 0, n_syn = 0;
  };
  std::map<std::string, Sums> by_eval;
  for (const auto& r : ratings) {
    if (r.system_id != system) continue;
    Sums& s = by_eval[r.evaluator_id];
    if (r.condition == Condition::kGroundTruth) {
      s.gt += r.score;
      ++s.n_gt;
    } else {
      s.syn += r.score;
      ++s.n_syn;
    }
  }
  if (by_eval.empty()) {
    throw Error(ErrorCode::kNoRatings, "no ratings for system " + system);
  }
  std::map<std::string, double> out;
  for (const auto& [ev, s] : by_eval) {
    if (s.n_gt == 0 || s.n_syn == 0) {
      throw Error(ErrorCode::kMissingCondition,
                  "evaluator " + ev + " has no " +
                      std::string(ConditionName(s.n_gt == 0
                                                    ? Condition::kGroundTruth
                                                    : Condition::kSynthesized)) +
                      " ratings for system " + system);
    }
    out[ev] = 5.0 * (s.syn / s.n_syn) / (s.gt / s.n_gt);
  }
  return out;
}

MetricReport DmosAggregate(std::span<const Rating> ratings,
                           const std::string& system) {
  const auto per_eval = DmosPerEvaluator(ratings, system);
  std::vector<double> values;
  for (const auto& [ev, v] : per_eval) values.push_back(v);
  const MeanStd ms = ComputeMeanStd(values);
  MetricReport rep;
  rep.system = system;
  rep.metric = Metric::kDmos;
  rep.mean = ms.mean;
  rep.std = ms.std;
  rep.n = ms.n;
  rep.n_scores = static_cast<int>(std::count_if(
      ratings.begin(), ratings.end(),
      [&](const Rating& r) { return r.system_id == system; }));
  return rep;
}

namespace {

std::set<std::string> Systems(std::span<const Rating> ratings) {
  std::set<std::string> s;
  for (const auto& r : ratings) s.insert(r.system_id);
  if (s.empty()) throw Error(ErrorCode::kNoRatings, "ratings file is empty");
  return s;
}

}  // namespace

std::vector<MetricReport> MosAggregateAll(std::span<const Rating> ratings) {
  std::vector<MetricReport> out;
  for (const auto& sys : Systems(ratings)) {
    out.push_back(MosAggregate(ratings, sys));
  }
  return out;
}

std::vector<MetricReport> DmosAggregateAll(std::span<const Rating> ratings) {
  std::vector<MetricReport> out;
  for (const auto& sys : Systems(ratings)) {
    out.push_back(DmosAggregate(ratings, sys));
  }
  return out;
}

MetricReport McdSummary(const std::string& system,
                        std::span<const double> per_pair) {
  const MeanStd ms = ComputeMeanStd(per_pair);
  MetricReport rep;
  rep.system = system;
  rep.metric = Metric::kMcd;
  rep.mean = ms.mean;
  rep.std = ms.std;
  rep.n = ms.n;
  rep.n_scores = ms.n;
  return rep;
}

std::string RenderMetricTable(std::span<const MetricReport> reports) {
  std::size_t width = 6;  // "system"
  for (const auto& r : reports) width = std::max(width, r.system.size());
  std::string out = "system";
  out.append(width - 6 + 2, ' ');
  out += "metric  score\n";
  for (const auto& r : reports) {
    out += r.system;
    out.append(width - r.system.size() + 2, ' ');
    const std::string_view m = MetricName(r.metric);
    out += m;
    out.append(8 - m.size(), ' ');
    out += FormatMeanStd(r.mean, r.std) + " (" + std::to_string(r.n) + ")\n";
  }
  return out;
}

}  // namespace ttscorpus
