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

#ifndef TTSCORPUS_AUDIO_QC_H_
#define TTSCORPUS_AUDIO_QC_H_

#include <string>
#include <vector>

#include "ttscorpus/wav.h"

namespace ttscorpus {

struct QcThresholds {
  double rate_min = 6.0;  // syllables per second, inclusive band
  double rate_max = 8.0;
  double silence_floor_db = -40.0;  // relative to the utterance peak
  double pause_min_ms = 200.0;
  double clip_level = 0.999;
  double clip_ratio_max = 1e-4;
  double frame_ms = 25.0;
  double hop_ms = 10.0;

  void Validate() const;
};

struct Interval {
  double start = 0.0;  // seconds
  double end = 0.0;

  double length() const { return end - start; }
  bool operator==(const Interval&) const = default;
};

struct EndpointResult {
  double speech_start = 0.0;
  double speech_end = 0.0;
  double leading_trim = 0.0;
  double trailing_trim = 0.0;
  std::vector<Interval> pauses;  // internal silences >= pause_min_ms
  double net_speech_duration = 0.0;
};

// Energy endpointing. Frames whose mean-square energy is below
// silence_floor_db relative to the loudest frame are silent; speech edges
// are then refined to the first/last sample above the same floor relative
// to the peak sample, so results do not depend on global gain. Throws
// kEmptyInput or kAllSilent.
EndpointResult Endpoint(const AudioBuffer& buf, const QcThresholds& t);

// Throws kZeroSpeechDuration.
double SyllableRate(int syllable_count, double net_speech_duration);

struct ClipResult {
  double ratio = 0.0;
  bool fail = false;
};
ClipResult ClipCheck(const AudioBuffer& buf, const QcThresholds& t);

enum class Verdict { kPass, kWarn, kFail };
std::string_view VerdictName(Verdict v);

struct QcReport {
  std::string utt_id;
  AudioSpec spec;
  bool format_ok = false;
  std::vector<std::string> format_reasons;
  double duration = 0.0;
  double net_speech_duration = 0.0;
  std::vector<Interval> pauses;
  int syllable_count = 0;
  double syllable_rate = 0.0;
  double clip_ratio = 0.0;
  std::string error;  // endpointing/rate failure, empty when none
  Verdict verdict = Verdict::kFail;
  std::vector<std::string> reasons;
};

// Recomputes verdict and reasons from the numeric fields only. Format
// mismatches fail in strict mode and warn in lenient mode; an out-of-band
// rate warns; clipping above the allowed ratio fails.
void DeriveVerdict(QcReport* report, const QcThresholds& t, bool strict);

struct QcOptions {
  QcThresholds thresholds;
  AudioSpec expected;
  bool strict = true;
};

QcReport RunQc(const std::string& utt_id, int syllable_count,
               const AudioBuffer& buf, const QcOptions& opt);

struct RateSummary {
  double mean = 0.0;
  double std = 0.0;  // population
  int count = 0;
  int out_of_band = 0;
};

// Over reports with a measured rate. Throws kEmptyInput when none qualify.
RateSummary DatasetRateSummary(const std::vector<QcReport>& reports,
                               const QcThresholds& t);

}  // namespace ttscorpus

#endif  // TTSCORPUS_AUDIO_QC_H_
