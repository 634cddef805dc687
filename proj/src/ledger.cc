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

#include "ttscorpus/ledger.h"

#include <openssl/evp.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ttscorpus/error.h"

namespace ttscorpus {

struct Digest::Impl {
  EVP_MD_CTX* ctx = nullptr;
};

Digest::Digest() : impl_(std::make_unique<Impl>()) {
  impl_->ctx = EVP_MD_CTX_new();
  if (impl_->ctx == nullptr ||
      EVP_DigestInit_ex(impl_->ctx, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIoError, "SHA-256 init failed");
  }
}

Digest::~Digest() { EVP_MD_CTX_free(impl_->ctx); }

void Digest::Add(std::string_view bytes) {
  std::uint8_t len[8];
  std::uint64_t n = bytes.size();
  for (int i = 0; i < 8; ++i) len[i] = static_cast<std::uint8_t>(n >> (8 * i));
  EVP_DigestUpdate(impl_->ctx, len, sizeof(len));
  EVP_DigestUpdate(impl_->ctx, bytes.data(), bytes.size());
}

void Digest::AddFile(const std::string& label, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  Add(label);
  Add(ss.str());
}

std::string Digest::Hex() {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(impl_->ctx, md, &len);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", md[i]);
    out += buf;
  }
  return out;
}

std::string Sha256Hex(std::string_view bytes) {
  Digest d;
  d.Add(bytes);
  return d.Hex();
}

RunLedger RunLedger::Load(const std::string& path) {
  RunLedger ledger;
  std::ifstream in(path, std::ios::binary);
  if (!in) return ledger;
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& [name, e] : j.at("stages").items()) {
      StageEntry s;
      s.input_digest = e.at("input_digest").get<std::string>();
      s.output_digest = e.at("output_digest").get<std::string>();
      s.tool_version = e.at("tool_version").get<std::string>();
      s.wall_time_s = e.at("wall_time_s").get<double>();
      s.failures = e.value("failures", 0);
      s.message = e.value("message", "");
      ledger.stages[name] = s;
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
  return ledger;
}

void RunLedger::Save(const std::string& path) const {
  nlohmann::ordered_json j;
  j["stages"] = nlohmann::ordered_json::object();
  for (const auto& [name, s] : stages) {
    auto& e = j["stages"][name];
    e["input_digest"] = s.input_digest;
    e["output_digest"] = s.output_digest;
    e["tool_version"] = s.tool_version;
    e["wall_time_s"] = s.wall_time_s;
    e["failures"] = s.failures;
    e["message"] = s.message;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp);
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace ttscorpus
