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

#ifndef TTSCORPUS_LEDGER_H_
#define TTSCORPUS_LEDGER_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace ttscorpus {

// Incremental SHA-256. Each Add() is length-prefixed so ("ab","c") and
// ("a","bc") hash differently.
class Digest {
 public:
  Digest();
  ~Digest();
  Digest(const Digest&) = delete;
  Digest& operator=(const Digest&) = delete;

  void Add(std::string_view bytes);
  // Adds the path label and the file bytes. Throws kIoError.
  void AddFile(const std::string& label, const std::string& path);
  // Lowercase hex; the object must not be used afterwards.
  std::string Hex();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string Sha256Hex(std::string_view bytes);

struct StageEntry {
  std::string input_digest;
  std::string output_digest;
  std::string tool_version;
  double wall_time_s = 0.0;
  int failures = 0;
  std::string message;
};

// Per-stage provenance kept next to the outputs. Not part of the golden
// outputs: wall time differs between runs.
struct RunLedger {
  std::map<std::string, StageEntry> stages;

  // A missing file yields an empty ledger; a corrupt one throws kParseError.
  static RunLedger Load(const std::string& path);
  void Save(const std::string& path) const;
};

}  // namespace ttscorpus

#endif  // TTSCORPUS_LEDGER_H_
