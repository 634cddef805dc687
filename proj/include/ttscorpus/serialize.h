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

#ifndef TTSCORPUS_SERIALIZE_H_
#define TTSCORPUS_SERIALIZE_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "ttscorpus/audio_qc.h"
#include "ttscorpus/batch.h"
#include "ttscorpus/corpus_stats.h"
#include "ttscorpus/curation.h"
#include "ttscorpus/ratings.h"
#include "ttscorpus/script.h"
#include "ttscorpus/selector.h"

namespace ttscorpus {

// Key order is fixed by insertion so dumps are byte-stable.
using Json = nlohmann::ordered_json;

Json ToJson(const SentenceRecord& rec);
SentenceRecord SentenceRecordFromJson(const Json& j);
Json ToJson(const Rejection& rej);
Json ToJson(const ZipfFit& fit);
Json ToJson(const WeakPhone& w);
Json ToJson(const SelectionResult& sel);
Json ToJson(const Violation& v);
Json ToJson(const CurationVerdict& v);
Json ToJson(const QcReport& r);
Json ToJson(const RateSummary& s);
Json ToJson(const MetricReport& r);
Json ToJson(const McdPairResult& r);

// One compact object per line, UTF-8, '\n' terminated.
std::string DumpLine(const Json& j);
// Throws kParseError naming the 1-based line.
std::vector<Json> ParseJsonLines(const std::string& text);

}  // namespace ttscorpus

#endif  // TTSCORPUS_SERIALIZE_H_
