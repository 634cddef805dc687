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

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include "ttscorpus/error.h"

namespace ttscorpus {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t Le32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t Le16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void Put16(std::vector<std::uint8_t>* out, std::uint16_t v) {
  out->push_back(static_cast<std::uint8_t>(v & 0xFF));
  out->push_back(static_cast<std::uint8_t>(v >> 8));
}

void Put32(std::vector<std::uint8_t>* out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out->push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
  }
}

void PutTag(std::vector<std::uint8_t>* out, const char* tag) {
  out->insert(out->end(), tag, tag + 4);
}

}  // namespace

std::vector<float> AudioBuffer::Mono() const {
  if (spec.channels <= 1) return samples;
  const std::size_t n = frames();
  std::vector<float> mono(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int c = 0; c < spec.channels; ++c) acc += samples[i * spec.channels + c];
    mono[i] = static_cast<float>(acc / spec.channels);
  }
  return mono;
}

AudioBuffer ParseWav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw Error(ErrorCode::kNotRiff, "missing RIFF/WAVE header");
  }
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  const std::uint8_t* data = nullptr;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    const std::uint32_t size = Le32(chunk + 4);
    const std::size_t body = pos + 8;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16 || body + size > bytes.size()) {
        throw Error(ErrorCode::kTruncatedData, "short fmt chunk");
      }
      const std::uint8_t* f = bytes.data() + body;
      format = Le16(f);
      channels = Le16(f + 2);
      rate = Le32(f + 4);
      bits = Le16(f + 14);
      if (format == kFormatExtensible) {
        if (size < 40) throw Error(ErrorCode::kTruncatedData, "short fmt chunk");
        format = Le16(f + 24);  // first two bytes of the subformat GUID
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (body + size > bytes.size()) {
        throw Error(ErrorCode::kTruncatedData,
                    "data chunk declares " + std::to_string(size) +
                        " bytes, " + std::to_string(bytes.size() - body) +
                        " present");
      }
      data = bytes.data() + body;
      data_size = size;
      break;
    }
    pos = body + size + (size & 1);
  }
  if (!have_fmt) throw Error(ErrorCode::kNotRiff, "no fmt chunk");
  if (data == nullptr) throw Error(ErrorCode::kTruncatedData, "no data chunk");

  const bool is_pcm = format == kFormatPcm &&
                      (bits == 8 || bits == 16 || bits == 24 || bits == 32);
  const bool is_float = format == kFormatFloat && (bits == 32 || bits == 64);
  if (!is_pcm && !is_float) {
    throw Error(ErrorCode::kUnsupportedCodec,
                "format tag " + std::to_string(format) + ", " +
                    std::to_string(bits) + " bits");
  }
  if (channels == 0 || rate == 0) {
    throw Error(ErrorCode::kUnsupportedCodec, "zero channels or sample rate");
  }
  const std::size_t width = bits / 8;
  if (data_size % (width * channels) != 0) {
    throw Error(ErrorCode::kTruncatedData, "partial sample frame");
  }

  AudioBuffer buf;
  buf.spec = {static_cast<int>(rate), bits, channels};
  buf.is_float = is_float;
  const std::size_t n = data_size / width;
  buf.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t* p = data + i * width;
    float v = 0.0f;
    if (is_float) {
      if (bits == 32) {
        const std::uint32_t u = Le32(p);
        std::memcpy(&v, &u, 4);
      } else {
        const std::uint64_t u =
            static_cast<std::uint64_t>(Le32(p)) |
            (static_cast<std::uint64_t>(Le32(p + 4)) << 32);
        double d;
        std::memcpy(&d, &u, 8);
        v = static_cast<float>(d);
      }
    } else {
      switch (bits) {
        case 8:
          v = (static_cast<int>(p[0]) - 128) / 128.0f;
          break;
        case 16:
          v = static_cast<std::int16_t>(Le16(p)) / 32768.0f;
          break;
        case 24: {
          std::int32_t s = p[0] | (p[1] << 8) | (p[2] << 16);
          if (s & 0x800000) s -= 0x1000000;
          v = static_cast<float>(s / 8388608.0);
          break;
        }
        default:
          v = static_cast<float>(static_cast<std::int32_t>(Le32(p)) /
                                 2147483648.0);
          break;
      }
    }
    buf.samples[i] = v;
  }
  return buf;
}

AudioBuffer ReadWav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return ParseWav(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::vector<std::uint8_t> EncodeWav(const AudioBuffer& buf) {
  const AudioSpec& s = buf.spec;
  const bool fl = buf.is_float;
  if (fl ? (s.bit_depth != 32 && s.bit_depth != 64)
         : (s.bit_depth != 8 && s.bit_depth != 16 && s.bit_depth != 24 &&
            s.bit_depth != 32)) {
    throw Error(ErrorCode::kUnsupportedCodec,
                "cannot encode " + std::to_string(s.bit_depth) + " bits");
  }
  const std::uint32_t width = s.bit_depth / 8;
  const auto data_size = static_cast<std::uint32_t>(buf.samples.size() * width);

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_size);
  PutTag(&out, "RIFF");
  Put32(&out, 36 + data_size);
  PutTag(&out, "WAVE");
  PutTag(&out, "fmt ");
  Put32(&out, 16);
  Put16(&out, fl ? kFormatFloat : kFormatPcm);
  Put16(&out, static_cast<std::uint16_t>(s.channels));
  Put32(&out, static_cast<std::uint32_t>(s.sample_rate));
  Put32(&out, static_cast<std::uint32_t>(s.sample_rate * s.channels * width));
  Put16(&out, static_cast<std::uint16_t>(s.channels * width));
  Put16(&out, static_cast<std::uint16_t>(s.bit_depth));
  PutTag(&out, "data");
  Put32(&out, data_size);

  auto quantize = [](float v, double scale, double lo, double hi) {
    return static_cast<std::int64_t>(
        std::clamp(std::nearbyint(static_cast<double>(v) * scale), lo, hi));
  };
  for (float v : buf.samples) {
    if (fl) {
      if (s.bit_depth == 32) {
        std::uint32_t u;
        std::memcpy(&u, &v, 4);
        Put32(&out, u);
      } else {
        const double d = v;
        std::uint64_t u;
        std::memcpy(&u, &d, 8);
        Put32(&out, static_cast<std::uint32_t>(u));
        Put32(&out, static_cast<std::uint32_t>(u >> 32));
      }
      continue;
    }
    switch (s.bit_depth) {
      case 8:
        out.push_back(static_cast<std::uint8_t>(quantize(v, 128.0, -128, 127) + 128));
        break;
      case 16:
        Put16(&out, static_cast<std::uint16_t>(quantize(v, 32768.0, -32768, 32767)));
        break;
      case 24: {
        const auto q = static_cast<std::uint32_t>(
            quantize(v, 8388608.0, -8388608, 8388607));
        out.push_back(static_cast<std::uint8_t>(q & 0xFF));
        out.push_back(static_cast<std::uint8_t>((q >> 8) & 0xFF));
        out.push_back(static_cast<std::uint8_t>((q >> 16) & 0xFF));
        break;
      }
      default:
        Put32(&out, static_cast<std::uint32_t>(
                        quantize(v, 2147483648.0, -2147483648.0, 2147483647.0)));
        break;
    }
  }
  return out;
}

void WriteWav(const std::string& path, const AudioBuffer& buf) {
  const auto bytes = EncodeWav(buf);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoError, "short write to " + path);
}

FormatCheck CheckFormat(const AudioSpec& actual, const AudioSpec& expected) {
  FormatCheck c;
  if (actual.sample_rate != expected.sample_rate) {
    c.reasons.push_back("sample rate " + std::to_string(actual.sample_rate) +
                        " Hz, expected " +
                        std::to_string(expected.sample_rate));
  }
  if (actual.bit_depth != expected.bit_depth) {
    c.reasons.push_back("bit depth " + std::to_string(actual.bit_depth) +
                        ", expected " + std::to_string(expected.bit_depth));
  }
  if (actual.channels != expected.channels) {
    c.reasons.push_back("channels " + std::to_string(actual.channels) +
                        ", expected " + std::to_string(expected.channels));
  }
  c.ok = c.reasons.empty();
  return c;
}

}  // namespace ttscorpus
