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

#ifndef TTSCORPUS_WAV_H_
#define TTSCORPUS_WAV_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ttscorpus {

struct AudioSpec {
  int sample_rate = 48000;
  int bit_depth = 16;
  int channels = 1;

  bool operator==(const AudioSpec&) const = default;
};

// Interleaved samples normalized to [-1, 1].
struct AudioBuffer {
  std::vector<float> samples;
  AudioSpec spec;
  bool is_float = false;  // IEEE float source encoding

  std::size_t frames() const {
    return spec.channels > 0 ? samples.size() / spec.channels : 0;
  }
  double duration() const {
    return spec.sample_rate > 0
               ? static_cast<double>(frames()) / spec.sample_rate
               : 0.0;
  }
  // Channel average; the buffer itself when already mono.
  std::vector<float> Mono() const;
};

// Parses RIFF/WAVE with PCM (8/16/24/32-bit) or IEEE float (32/64-bit) data,
// including WAVE_FORMAT_EXTENSIBLE wrappers of those. Throws kNotRiff,
// kUnsupportedCodec, kTruncatedData or kIoError.
AudioBuffer ParseWav(std::span<const std::uint8_t> bytes);
AudioBuffer ReadWav(const std::string& path);

// Canonical 44-byte-header PCM encoding (IEEE float for is_float buffers).
// Samples are rounded to the nearest code and saturated.
std::vector<std::uint8_t> EncodeWav(const AudioBuffer& buf);
void WriteWav(const std::string& path, const AudioBuffer& buf);

struct FormatCheck {
  bool ok = true;
  std::vector<std::string> reasons;
};

// Compares a decoded spec against the expected recording format.
FormatCheck CheckFormat(const AudioSpec& actual, const AudioSpec& expected);

}  // namespace ttscorpus

#endif  // TTSCORPUS_WAV_H_
