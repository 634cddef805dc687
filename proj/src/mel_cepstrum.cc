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

#include "ttscorpus/mel_cepstrum.h"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "ttscorpus/error.h"

namespace ttscorpus {

namespace {

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

// Shared, read-only analysis state for one buffer.
struct Analysis {
  std::vector<float> signal;
  int frame_len = 0;
  int hop = 0;
  int fft_size = 0;
  int num_frames = 0;
  Eigen::VectorXd window;
  Eigen::MatrixXd filterbank;
  Eigen::MatrixXd dct;  // (D + 1) x bands
};

Analysis Prepare(const AudioBuffer& buf, const MelCepstrumConfig& cfg) {
  cfg.Validate();
  Analysis a;
  a.signal = buf.Mono();
  const double sr = buf.spec.sample_rate;
  a.frame_len = static_cast<int>(std::lround(cfg.frame_ms * sr / 1000.0));
  a.hop = std::max(1, static_cast<int>(std::lround(cfg.hop_ms * sr / 1000.0)));
  if (a.frame_len < 2 || static_cast<int>(a.signal.size()) < a.frame_len) {
    throw Error(ErrorCode::kTooShort,
                std::to_string(a.signal.size()) + " samples, window needs " +
                    std::to_string(a.frame_len));
  }
  a.num_frames =
      1 + (static_cast<int>(a.signal.size()) - a.frame_len) / a.hop;
  a.fft_size = 1;
  while (a.fft_size < a.frame_len) a.fft_size <<= 1;

  a.window.resize(a.frame_len);
  for (int i = 0; i < a.frame_len; ++i) {
    a.window[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * i /
                                         (a.frame_len - 1));
  }
  const double high = cfg.high_hz > 0.0 ? cfg.high_hz : sr / 2.0;
  a.filterbank =
      MelFilterbank(cfg.num_mel_bands, a.fft_size, sr, cfg.low_hz, high);

  const int bands = cfg.num_mel_bands;
  a.dct.resize(cfg.num_coeffs + 1, bands);
  for (int k = 0; k <= cfg.num_coeffs; ++k) {
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / bands);
    for (int m = 0; m < bands; ++m) {
      a.dct(k, m) =
          scale * std::cos(std::numbers::pi * k * (m + 0.5) / bands);
    }
  }
  return a;
}

void ComputeFrame(const Analysis& a, int t, Eigen::FFT<double>* fft,
                  std::vector<double>* time_buf,
                  std::vector<std::complex<double>>* spec_buf,
                  Eigen::MatrixXd* out) {
  std::vector<double>& x = *time_buf;
  x.assign(a.fft_size, 0.0);
  const std::size_t offset = static_cast<std::size_t>(t) * a.hop;
  for (int i = 0; i < a.frame_len; ++i) {
    x[i] = a.signal[offset + i] * a.window[i];
  }
  fft->fwd(*spec_buf, x);
  const int bins = a.fft_size / 2 + 1;
  Eigen::VectorXd mag(bins);
  for (int k = 0; k < bins; ++k) mag[k] = std::abs((*spec_buf)[k]);
  Eigen::VectorXd logmel = a.filterbank * mag;
  // Only exact zeros are floored: any positive energy keeps its log so a
  // global gain change moves c0 alone.
  constexpr double kFloor = std::numeric_limits<double>::min();
  for (Eigen::Index m = 0; m < logmel.size(); ++m) {
    logmel[m] = std::log(std::max(logmel[m], kFloor));
  }
  out->row(t) = (a.dct * logmel).transpose();
}

MelCepstraSequence Finish(const AudioBuffer& buf, const MelCepstrumConfig& cfg,
                          Eigen::MatrixXd frames) {
  MelCepstraSequence seq;
  seq.frames = std::move(frames);
  seq.frame_hop_ms = cfg.hop_ms;
  seq.source_spec = buf.spec;
  return seq;
}

}  // namespace

void MelCepstrumConfig::Validate() const {
  if (frame_ms <= 0 || hop_ms <= 0 || num_mel_bands < 2 || num_coeffs < 1 ||
      num_coeffs >= num_mel_bands || low_hz < 0 ||
      (high_hz > 0 && high_hz <= low_hz)) {
    throw Error(ErrorCode::kInvalidArgument, "bad mel-cepstrum parameters");
  }
}

Eigen::MatrixXd MelFilterbank(int num_bands, int fft_size, double sample_rate,
                              double low_hz, double high_hz) {
  const int bins = fft_size / 2 + 1;
  Eigen::MatrixXd fb = Eigen::MatrixXd::Zero(num_bands, bins);
  const double mel_lo = HzToMel(low_hz);
  const double mel_hi = HzToMel(high_hz);
  std::vector<double> edges(num_bands + 2);
  for (int i = 0; i < num_bands + 2; ++i) {
    edges[i] = MelToHz(mel_lo + (mel_hi - mel_lo) * i / (num_bands + 1));
  }
  for (int m = 0; m < num_bands; ++m) {
    const double left = edges[m], center = edges[m + 1], right = edges[m + 2];
    for (int k = 0; k < bins; ++k) {
      const double f = k * sample_rate / fft_size;
      if (f > left && f < right) {
        fb(m, k) = f <= center ? (f - left) / (center - left)
                               : (right - f) / (right - center);
      }
    }
  }
  return fb;
}

MelCepstraSequence MelCepstraSerial(const AudioBuffer& buf,
                                    const MelCepstrumConfig& cfg) {
  const Analysis a = Prepare(buf, cfg);
  Eigen::MatrixXd frames(a.num_frames, cfg.num_coeffs + 1);
  Eigen::FFT<double> fft;
  std::vector<double> time_buf;
  std::vector<std::complex<double>> spec_buf;
  for (int t = 0; t < a.num_frames; ++t) {
    ComputeFrame(a, t, &fft, &time_buf, &spec_buf, &frames);
  }
  return Finish(buf, cfg, std::move(frames));
}

MelCepstraSequence MelCepstra(const AudioBuffer& buf,
                              const MelCepstrumConfig& cfg) {
  const Analysis a = Prepare(buf, cfg);
  Eigen::MatrixXd frames(a.num_frames, cfg.num_coeffs + 1);
#pragma omp parallel
  {
    // Eigen::FFT caches plans internally, so each thread owns one.
    Eigen::FFT<double> fft;
    std::vector<double> time_buf;
    std::vector<std::complex<double>> spec_buf;
#pragma omp for schedule(static)
    for (int t = 0; t < a.num_frames; ++t) {
      ComputeFrame(a, t, &fft, &time_buf, &spec_buf, &frames);
    }
  }
  return Finish(buf, cfg, std::move(frames));
}

}  // namespace ttscorpus
