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

#include "ttscorpus/wav.h"

#include <gtest/gtest.h>

#include <random>

#include "test_util.h"
#include "ttscorpus/error.h"

namespace ttscorpus {
namespace {

AudioBuffer Noise(AudioSpec spec, bool is_float, std::size_t frames,
                  unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<float> u(-0.9f, 0.9f);
  AudioBuffer b;
  b.spec = spec;
  b.is_float = is_float;
  b.samples.resize(frames * spec.channels);
  for (auto& v : b.samples) v = u(rng);
  return b;
}

ErrorCode ParseCode(const std::vector<std::uint8_t>& bytes) {
  try {
    ParseWav(bytes);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInvalidArgument;
}

struct Format {
  int bits;
  int channels;
  bool is_float;
};

class WavRoundTripTest : public ::testing::TestWithParam<Format> {};

TEST_P(WavRoundTripTest, BitIdentical) {
  const Format f = GetParam();
  const AudioBuffer src =
      Noise({48000, f.bits, f.channels}, f.is_float, 1000, f.bits);
  const auto bytes = EncodeWav(src);
  const AudioBuffer back = ParseWav(bytes);
  EXPECT_EQ(back.spec, src.spec);
  EXPECT_EQ(back.is_float, src.is_float);
  EXPECT_EQ(back.frames(), 1000u);
  EXPECT_EQ(EncodeWav(back), bytes);
}

INSTANTIATE_TEST_SUITE_P(Formats, WavRoundTripTest,
                         ::testing::Values(Format{8, 1, false},
                                           Format{16, 1, false},
                                           Format{16, 2, false},
                                           Format{24, 1, false},
                                           Format{32, 1, false},
                                           Format{32, 2, true},
                                           Format{64, 1, true}),
                         [](const ::testing::TestParamInfo<Format>& info) {
                           const Format& f = info.param;
                           return std::string(f.is_float ? "float" : "pcm") +
                                  std::to_string(f.bits) + "x" +
                                  std::to_string(f.channels);
                         });

TEST(WavTest, FileRoundTrip) {
  const std::string dir = testing::TempDir("wav");
  const AudioBuffer src = Noise({48000, 16, 1}, false, 4800, 3);
  WriteWav(dir + "/a.wav", src);
  const AudioBuffer back = ReadWav(dir + "/a.wav");
  EXPECT_EQ(EncodeWav(back), EncodeWav(src));
  EXPECT_DOUBLE_EQ(back.duration(), 0.1);
}

TEST(WavTest, Truncated) {
  auto bytes = EncodeWav(Noise({48000, 16, 1}, false, 100, 1));
  bytes.resize(bytes.size() - 10);
  EXPECT_EQ(ParseCode(bytes), ErrorCode::kTruncatedData);
  bytes.resize(30);  // inside the fmt chunk
  EXPECT_EQ(ParseCode(bytes), ErrorCode::kTruncatedData);
}

TEST(WavTest, NotRiff) {
  EXPECT_EQ(ParseCode({}), ErrorCode::kNotRiff);
  auto bytes = EncodeWav(Noise({48000, 16, 1}, false, 10, 1));
  bytes[0] = 'X';
  EXPECT_EQ(ParseCode(bytes), ErrorCode::kNotRiff);
}

TEST(WavTest, UnsupportedCodec) {
  auto bytes = EncodeWav(Noise({48000, 16, 1}, false, 10, 1));
  bytes[20] = 2;  // ADPCM format tag
  EXPECT_EQ(ParseCode(bytes), ErrorCode::kUnsupportedCodec);
}

TEST(WavTest, SkipsUnknownChunks) {
  const AudioBuffer src = Noise({16000, 16, 1}, false, 50, 5);
  auto bytes = EncodeWav(src);
  // Insert an odd-sized LIST chunk (padded) before "data".
  const std::vector<std::uint8_t> list = {'L', 'I', 'S', 'T', 3, 0, 0, 0,
                                          'a', 'b', 'c', 0};
  bytes.insert(bytes.begin() + 36, list.begin(), list.end());
  const AudioBuffer back = ParseWav(bytes);
  EXPECT_EQ(back.samples, ParseWav(EncodeWav(src)).samples);
}

TEST(WavTest, FormatCheck) {
  const AudioSpec expected{48000, 16, 1};
  EXPECT_TRUE(CheckFormat({48000, 16, 1}, expected).ok);
  const FormatCheck bad = CheckFormat({44100, 16, 1}, expected);
  EXPECT_FALSE(bad.ok);
  ASSERT_EQ(bad.reasons.size(), 1u);
  EXPECT_NE(bad.reasons[0].find("44100"), std::string::npos);
  EXPECT_EQ(CheckFormat({44100, 24, 2}, expected).reasons.size(), 3u);
}

TEST(WavTest, MonoAverage) {
  AudioBuffer b;
  b.spec = {8000, 16, 2};
  b.samples = {0.2f, 0.4f, -1.0f, 1.0f};
  EXPECT_EQ(b.frames(), 2u);
  const auto m = b.Mono();
  ASSERT_EQ(m.size(), 2u);
  EXPECT_FLOAT_EQ(m[0], 0.3f);
  EXPECT_FLOAT_EQ(m[1], 0.0f);
}

TEST(WavTest, MissingFile) {
  try {
    ReadWav("/nonexistent/x.wav");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
}

}  // namespace
}  // namespace ttscorpus
