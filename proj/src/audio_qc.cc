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

#include "ttscorpus/audio_qc.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ttscorpus/error.h"
#include "ttscorpus/summary.h"

namespace ttscorpus {

void QcThresholds::Validate() const {
  const double all[] = {rate_min,   rate_max,       silence_floor_db,
                        pause_min_ms, clip_level,   clip_ratio_max,
                        frame_ms,   hop_ms};
  for (double v : all) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite QC threshold");
    }
  }
  if (!(rate_min < rate_max)) {
    throw Error(ErrorCode::kInvalidArgument, "rate band needs min < max");
  }
  if (frame_ms <= 0 || hop_ms <= 0 || pause_min_ms < 0) {
    throw Error(ErrorCode::kInvalidArgument, "bad framing parameters");
  }
}

EndpointResult Endpoint(const AudioBuffer& buf, const QcThresholds& t) {
  const std::vector<float> x = buf.Mono();
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "empty audio");
  const double sr = buf.spec.sample_rate;
  const auto frame = std::max<std::ptrdiff_t>(
      1, std::lround(t.frame_ms * sr / 1000.0));
  const auto hop =
      std::max<std::ptrdiff_t>(1, std::lround(t.hop_ms * sr / 1000.0));
  const std::ptrdiff_t n_frames =
      n <= frame ? 1 : 1 + (n - frame + hop - 1) / hop;

  std::vector<double> energy(n_frames, 0.0);
  for (std::ptrdiff_t k = 0; k < n_frames; ++k) {
    const std::ptrdiff_t b = k * hop;
    const std::ptrdiff_t e = std::min(n, b + frame);
    double acc = 0.0;
    for (std::ptrdiff_t i = b; i < e; ++i) acc += double(x[i]) * x[i];
    energy[k] = acc / static_cast<double>(e - b);
  }
  const double e_max = *std::max_element(energy.begin(), energy.end());
  if (e_max <= 0.0) throw Error(ErrorCode::kAllSilent, "no energy");
  const double e_thr = e_max * std::pow(10.0, t.silence_floor_db / 10.0);
  double peak = 0.0;
  for (float v : x) peak = std::max(peak, std::fabs(double(v)));
  const double a_thr = peak * std::pow(10.0, t.silence_floor_db / 20.0);

  std::vector<char> speech(n_frames);
  for (std::ptrdiff_t k = 0; k < n_frames; ++k) speech[k] = energy[k] >= e_thr;

  auto loud = [&](std::ptrdiff_t i) { return std::fabs(double(x[i])) >= a_thr; };
  // First loud sample in [b, e), or `fallback`.
  auto first_loud = [&](std::ptrdiff_t b, std::ptrdiff_t e,
                        std::ptrdiff_t fallback) {
    b = std::max<std::ptrdiff_t>(b, 0);
    e = std::min(e, n);
    for (std::ptrdiff_t i = b; i < e; ++i) {
      if (loud(i)) return i;
    }
    return fallback;
  };
  // One past the last loud sample in [b, e), or `fallback`.
  auto last_loud_end = [&](std::ptrdiff_t b, std::ptrdiff_t e,
                           std::ptrdiff_t fallback) {
    b = std::max<std::ptrdiff_t>(b, 0);
    e = std::min(e, n);
    for (std::ptrdiff_t i = e - 1; i >= b; --i) {
      if (loud(i)) return i + 1;
    }
    return fallback;
  };

  const auto first = static_cast<std::ptrdiff_t>(
      std::find(speech.begin(), speech.end(), 1) - speech.begin());
  std::ptrdiff_t last = n_frames - 1;
  while (!speech[last]) --last;

  const std::ptrdiff_t start =
      first_loud(first > 0 ? (first - 1) * hop + frame : 0, first * hop + frame,
                 first * hop);
  const std::ptrdiff_t end =
      last_loud_end(last * hop, last == n_frames - 1 ? n : (last + 1) * hop,
                    std::min(n, last * hop + frame));

  EndpointResult r;
  r.speech_start = start / sr;
  r.speech_end = end / sr;
  r.leading_trim = r.speech_start;
  r.trailing_trim = n / sr - r.speech_end;

  double paused = 0.0;
  std::ptrdiff_t k = first;
  while (k <= last) {
    if (speech[k]) {
      ++k;
      continue;
    }
    const std::ptrdiff_t a = k;
    while (!speech[k]) ++k;  // bounded: speech[last] is set
    const std::ptrdiff_t b = k - 1;
    const std::ptrdiff_t gap_start =
        last_loud_end((a - 1) * hop, a * hop, a * hop);
    const std::ptrdiff_t gap_end =
        first_loud(b * hop + frame, (b + 1) * hop + frame,
                   std::max(a * hop, b * hop + frame));
    if (gap_end <= gap_start) continue;
    const Interval gap{gap_start / sr, gap_end / sr};
    if (gap.length() * 1000.0 >= t.pause_min_ms) {
      r.pauses.push_back(gap);
      paused += gap.length();
    }
  }
  r.net_speech_duration = std::max(0.0, (end - start) / sr - paused);
  return r;
}

double SyllableRate(int syllable_count, double net_speech_duration) {
  if (!(net_speech_duration > 0.0)) {
    throw Error(ErrorCode::kZeroSpeechDuration, "no net speech");
  }
  return syllable_count / net_speech_duration;
}

ClipResult ClipCheck(const AudioBuffer& buf, const QcThresholds& t) {
  ClipResult r;
  if (buf.samples.empty()) return r;
  std::size_t clipped = 0;
  for (float v : buf.samples) clipped += std::fabs(v) >= t.clip_level ? 1 : 0;
  r.ratio = static_cast<double>(clipped) / buf.samples.size();
  r.fail = r.ratio > t.clip_ratio_max;
  return r;
}

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kWarn: return "warn";
    case Verdict::kFail: return "fail";
  }
  return "fail";
}

void DeriveVerdict(QcReport* r, const QcThresholds& t, bool strict) {
  r->reasons.clear();
  bool fail = false, warn = false;
  if (!r->format_ok) {
    for (const auto& why : r->format_reasons) {
      r->reasons.push_back("FormatMismatch: " + why);
    }
    (strict ? fail : warn) = true;
  }
  if (!r->error.empty()) {
    r->reasons.push_back(r->error);
    fail = true;
  } else if (r->syllable_rate < t.rate_min || r->syllable_rate > t.rate_max) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "OutOfBand: %.2f syl/s outside [%.2f, %.2f]",
                  r->syllable_rate, t.rate_min, t.rate_max);
    r->reasons.push_back(buf);
    warn = true;
  }
  if (r->clip_ratio > t.clip_ratio_max) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "Clipping: ratio %.6f above %.6f",
                  r->clip_ratio, t.clip_ratio_max);
    r->reasons.push_back(buf);
    fail = true;
  }
  r->verdict = fail ? Verdict::kFail : warn ? Verdict::kWarn : Verdict::kPass;
}

QcReport RunQc(const std::string& utt_id, int syllable_count,
               const AudioBuffer& buf, const QcOptions& opt) {
  QcReport r;
  r.utt_id = utt_id;
  r.spec = buf.spec;
  const FormatCheck fc = CheckFormat(buf.spec, opt.expected);
  r.format_ok = fc.ok;
  r.format_reasons = fc.reasons;
  r.duration = buf.duration();
  r.syllable_count = syllable_count;
  r.clip_ratio = ClipCheck(buf, opt.thresholds).ratio;
  try {
    const EndpointResult ep = Endpoint(buf, opt.thresholds);
    r.net_speech_duration = ep.net_speech_duration;
    r.pauses = ep.pauses;
    r.syllable_rate = SyllableRate(syllable_count, ep.net_speech_duration);
  } catch (const Error& e) {
    r.error = e.what();
  }
  DeriveVerdict(&r, opt.thresholds, opt.strict);
  return r;
}

RateSummary DatasetRateSummary(const std::vector<QcReport>& reports,
                               const QcThresholds& t) {
  std::vector<double> rates;
  RateSummary s;
  for (const auto& r : reports) {
    if (!r.error.empty()) continue;
    rates.push_back(r.syllable_rate);
    if (r.syllable_rate < t.rate_min || r.syllable_rate > t.rate_max) {
      ++s.out_of_band;
    }
  }
  const MeanStd ms = ComputeMeanStd(rates);
  s.mean = ms.mean;
  s.std = ms.std;
  s.count = ms.n;
  return s;
}

}  // namespace ttscorpus
