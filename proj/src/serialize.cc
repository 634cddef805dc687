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

#include "ttscorpus/serialize.h"

#include <sstream>

#include "ttscorpus/error.h"

namespace ttscorpus {

Json ToJson(const SentenceRecord& rec) {
  Json j;
  j["id"] = rec.id;
  j["raw_text"] = rec.raw_text;
  j["words"] = rec.words;
  j["syllables_per_word"] = rec.syllables_per_word;
  j["phones"] = rec.phones;
  j["word_count"] = rec.word_count;
  j["syllable_count"] = rec.syllable_count;
  j["needs_normalization"] = rec.needs_normalization;
  j["warnings"] = rec.warnings;
  return j;
}

SentenceRecord SentenceRecordFromJson(const Json& j) {
  SentenceRecord rec;
  try {
    rec.id = j.at("id").get<std::string>();
    rec.raw_text = j.at("raw_text").get<std::string>();
    rec.words = j.at("words").get<std::vector<std::string>>();
    rec.syllables_per_word =
        j.at("syllables_per_word").get<std::vector<std::vector<std::string>>>();
    rec.phones = j.at("phones").get<std::vector<std::string>>();
    rec.word_count = j.at("word_count").get<int>();
    rec.syllable_count = j.at("syllable_count").get<int>();
    rec.needs_normalization = j.value("needs_normalization", false);
    if (j.contains("warnings")) {
      rec.warnings = j.at("warnings").get<std::vector<std::string>>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("bad sentence record: ") + e.what());
  }
  return rec;
}

Json ToJson(const Rejection& rej) {
  Json j;
  j["id"] = rej.id;
  j["reason"] = std::string(ErrorCodeName(rej.reason));
  j["detail"] = rej.detail;
  return j;
}

Json ToJson(const ZipfFit& fit) {
  Json j;
  j["exponent"] = fit.exponent;
  j["intercept"] = fit.intercept;
  j["r_squared"] = fit.r_squared;
  j["ranks_used"] = fit.ranks_used;
  return j;
}

Json ToJson(const WeakPhone& w) {
  Json j;
  j["phone"] = w.phone;
  j["count"] = w.count;
  j["sentences"] = w.sentences;
  return j;
}

Json ToJson(const SelectionResult& sel) {
  Json j;
  j["selected_ids"] = sel.selected_ids;
  j["selected_count"] = sel.selected_ids.size();
  j["covered_syllables"] = sel.covered_syllables.size();
  j["inventory_size"] = sel.inventory_size;
  j["coverage_ratio"] = sel.coverage_ratio;
  Json adds = Json::array();
  for (const auto& a : sel.augmentation_additions) {
    Json row;
    row["phone"] = a.phone;
    row["added_ids"] = a.added_ids;
    adds.push_back(std::move(row));
  }
  j["augmentation_additions"] = std::move(adds);
  j["warnings"] = sel.warnings;
  return j;
}

Json ToJson(const Violation& v) {
  Json j;
  j["rule"] = v.rule;
  j["begin"] = v.begin;
  j["end"] = v.end;
  j["severity"] = std::string(SeverityName(v.severity));
  j["detail"] = v.detail;
  return j;
}

Json ToJson(const CurationVerdict& v) {
  Json j;
  j["id"] = v.sentence_id;
  j["needs_human"] = v.NeedsHuman();
  j["fixes"] = v.CountFixes();
  Json vs = Json::array();
  for (const auto& x : v.violations) vs.push_back(ToJson(x));
  j["violations"] = std::move(vs);
  j["normalized_text"] = v.normalized_text;
  return j;
}

Json ToJson(const QcReport& r) {
  Json j;
  j["utt_id"] = r.utt_id;
  j["sample_rate"] = r.spec.sample_rate;
  j["bit_depth"] = r.spec.bit_depth;
  j["channels"] = r.spec.channels;
  j["format_ok"] = r.format_ok;
  j["duration"] = r.duration;
  j["net_speech_duration"] = r.net_speech_duration;
  Json pauses = Json::array();
  for (const auto& p : r.pauses) pauses.push_back(Json::array({p.start, p.end}));
  j["pauses"] = std::move(pauses);
  j["syllable_count"] = r.syllable_count;
  j["syllable_rate"] = r.syllable_rate;
  j["clip_ratio"] = r.clip_ratio;
  j["verdict"] = std::string(VerdictName(r.verdict));
  j["reasons"] = r.reasons;
  return j;
}

Json ToJson(const RateSummary& s) {
  Json j;
  j["mean"] = s.mean;
  j["std"] = s.std;
  j["count"] = s.count;
  j["out_of_band"] = s.out_of_band;
  return j;
}

Json ToJson(const MetricReport& r) {
  Json j;
  j["system"] = r.system;
  j["metric"] = std::string(MetricName(r.metric));
  j["mean"] = r.mean;
  j["std"] = r.std;
  j["n"] = r.n;
  j["n_scores"] = r.n_scores;
  return j;
}

Json ToJson(const McdPairResult& r) {
  Json j;
  j["system"] = r.job.system;
  j["ref"] = r.job.ref_path;
  j["syn"] = r.job.syn_path;
  if (r.error.empty()) {
    j["mcd"] = r.mcd;
  } else {
    j["error"] = r.error;
  }
  return j;
}

std::string DumpLine(const Json& j) {
  // Invalid UTF-8 would throw in dump(); replace instead so one bad line
  // cannot sink a run.
  return j.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

std::vector<Json> ParseJsonLines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace ttscorpus
