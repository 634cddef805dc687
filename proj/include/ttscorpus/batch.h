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

#ifndef TTSCORPUS_BATCH_H_
#define TTSCORPUS_BATCH_H_

#include <string>
#include <vector>

#include "ttscorpus/audio_qc.h"
#include "ttscorpus/corpus_stats.h"
#include "ttscorpus/dtw.h"
#include "ttscorpus/script.h"

// Per-item fan-out over OpenMP. Results are stored by input position so
// output order never depends on scheduling. Each kernel has a serial twin
// used as the reference in tests and benchmarks.

namespace ttscorpus {

struct TextItem {
  std::string id;
  std::string text;
};

std::vector<Analysis> AnalyzeBatch(const std::vector<TextItem>& items,
                                   const LanguageConfig& cfg, ParseMode mode);
std::vector<Analysis> AnalyzeBatchSerial(const std::vector<TextItem>& items,
                                         const LanguageConfig& cfg,
                                         ParseMode mode);

// Thread-local shards merged at the end. Throws kDuplicateSentenceId.
CorpusStats AccumulateBatch(const std::vector<SentenceRecord>& records);
CorpusStats AccumulateBatchSerial(const std::vector<SentenceRecord>& records);

struct QcJob {
  std::string utt_id;
  std::string wav_path;
  int syllable_count = 0;
  std::string text_error;  // transcript failed analysis; reported as-is
};

// Reads and checks each file. Decode errors land in the report (verdict
// fail) instead of aborting the batch.
QcReport RunQcJob(const QcJob& job, const QcOptions& opt);
std::vector<QcReport> QcBatch(const std::vector<QcJob>& jobs,
                              const QcOptions& opt);
std::vector<QcReport> QcBatchSerial(const std::vector<QcJob>& jobs,
                                    const QcOptions& opt);

struct McdJob {
  std::string system;
  std::string ref_path;
  std::string syn_path;
};

struct McdPairResult {
  McdJob job;
  double mcd = 0.0;
  std::string error;  // empty on success
};

std::vector<McdPairResult> McdBatch(const std::vector<McdJob>& jobs,
                                    const McdOptions& opt);
std::vector<McdPairResult> McdBatchSerial(const std::vector<McdJob>& jobs,
                                          const McdOptions& opt);

}  // namespace ttscorpus

#endif  // TTSCORPUS_BATCH_H_
