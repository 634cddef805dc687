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

#ifndef TTSCORPUS_MEL_CEPSTRUM_H_
#define TTSCORPUS_MEL_CEPSTRUM_H_

#include <Eigen/Dense>

#include "ttscorpus/wav.h"

namespace ttscorpus {

struct MelCepstrumConfig {
  double frame_ms = 25.0;
  double hop_ms = 10.0;
  int num_mel_bands = 40;
  int num_coeffs = 24;  // distance dimensions c1..cD; c0 is kept as well
  double low_hz = 0.0;
  double high_hz = 0.0;  // 0 means Nyquist

  void Validate() const;
};

// frames is T x (D + 1); column 0 holds c0 (log-energy term), columns
// 1..D are the coefficients that enter distances.
struct MelCepstraSequence {
  Eigen::MatrixXd frames;
  double frame_hop_ms = 10.0;
  AudioSpec source_spec;

  int num_frames() const { return static_cast<int>(frames.rows()); }
  int dims() const { return static_cast<int>(frames.cols()) - 1; }
};

// Hamming window, magnitude spectrum, triangular mel filterbank, natural
// log, orthonormal DCT-II. Frames are computed in parallel; the serial
// variant is the reference. Throws kTooShort when the buffer is shorter
// than one window.
MelCepstraSequence MelCepstra(const AudioBuffer& buf,
                              const MelCepstrumConfig& cfg = {});
MelCepstraSequence MelCepstraSerial(const AudioBuffer& buf,
                                    const MelCepstrumConfig& cfg = {});

// Triangular HTK-mel filter weights, num_bands x (fft_size / 2 + 1).
Eigen::MatrixXd MelFilterbank(int num_bands, int fft_size, double sample_rate,
                              double low_hz, double high_hz);

}  // namespace ttscorpus

#endif  // TTSCORPUS_MEL_CEPSTRUM_H_
