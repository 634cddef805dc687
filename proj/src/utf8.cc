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

#include "ttscorpus/utf8.h"

#include <cstdio>

#include "ttscorpus/error.h"

namespace ttscorpus {

std::vector<DecodedChar> DecodeUtf8(std::string_view text) {
  std::vector<DecodedChar> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    int len = 0;
    Codepoint cp = 0;
    if (lead < 0x80) {
      len = 1;
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      len = 2;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4;
      cp = lead & 0x07;
    } else {
      throw Error(ErrorCode::kParseError,
                  "invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > text.size()) {
      throw Error(ErrorCode::kParseError,
                  "truncated UTF-8 sequence at offset " + std::to_string(i));
    }
    for (int k = 1; k < len; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw Error(ErrorCode::kParseError,
                    "invalid UTF-8 continuation at offset " +
                        std::to_string(i + k));
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    static constexpr Codepoint kMinForLen[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLen[len] || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw Error(ErrorCode::kParseError,
                  "invalid codepoint at offset " + std::to_string(i));
    }
    out.push_back({cp, i, i + len});
    i += len;
  }
  return out;
}

std::vector<Codepoint> ToCodepoints(std::string_view text) {
  std::vector<Codepoint> cps;
  for (const auto& d : DecodeUtf8(text)) cps.push_back(d.cp);
  return cps;
}

void AppendUtf8(Codepoint cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string ToUtf8(const std::vector<Codepoint>& cps) {
  std::string out;
  for (Codepoint cp : cps) AppendUtf8(cp, &out);
  return out;
}

bool IsUnicodeSpace(Codepoint cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool IsPunctuation(Codepoint cp) {
  if (cp < 0x80) {
    switch (cp) {
      case '!': case '"': case '\'': case '(': case ')': case '*':
      case ',': case '-': case '.': case '/': case ':': case ';':
      case '?': case '[': case '\\': case ']': case '_': case '{':
      case '}':
        return true;
      default:
        return false;
    }
  }
  switch (cp) {
    case 0xA1: case 0xA7: case 0xAB: case 0xB6: case 0xB7: case 0xBB:
    case 0xBF:
      return true;
    default:
      break;
  }
  return (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E) ||
         (cp >= 0x3000 && cp <= 0x303F) || (cp >= 0xFF01 && cp <= 0xFF0F);
}

bool IsSymbol(Codepoint cp) {
  if (cp < 0x80) {
    switch (cp) {
      case '#': case '$': case '%': case '&': case '+': case '<':
      case '=': case '>': case '@': case '^': case '`': case '|':
      case '~':
        return true;
      default:
        return false;
    }
  }
  if (cp >= 0xA2 && cp <= 0xBE && !IsPunctuation(cp)) return true;
  return cp == 0xD7 || cp == 0xF7 || (cp >= 0x20A0 && cp <= 0x20CF) ||
         (cp >= 0x2100 && cp <= 0x214F) || (cp >= 0x2190 && cp <= 0x2BFF);
}

std::string FormatCodepoint(Codepoint cp) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

}  // namespace ttscorpus
