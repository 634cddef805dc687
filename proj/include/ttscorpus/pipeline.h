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

#ifndef TTSCORPUS_PIPELINE_H_
#define TTSCORPUS_PIPELINE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ttscorpus/audio_qc.h"
#include "ttscorpus/batch.h"
#include "ttscorpus/dtw.h"
#include "ttscorpus/script.h"
#include "ttscorpus/selector.h"

namespace ttscorpus {

inline constexpr char kToolVersion[] = "ttscorpus 0.1.0";

struct PipelineConfig {
  std::string language_config;  // required by analyze, curate and qc
  ParseMode mode = ParseMode::kStrict;
  std::string out_dir = ".";
  bool force = false;  // ignore the run ledger
  std::uint64_t seed = 0;  // reserved; every stage is deterministic

  // stats
  std::int64_t zipf_min_count = 2;
  // select
  SelectionConstraints constraints;
  AugmentationPolicy policy;
  StopCriterion stop = TargetCoverage{1.0};
  // curate
  std::string lexicon_path;
  std::string keywords_path;
  std::string word_freq_corpus;  // text file; empty disables uncommon-word
  std::int64_t min_word_count = 2;
  // qc
  QcThresholds thresholds;
  AudioSpec expected;
  std::string audio_root;  // defaults to the manifest directory
  // mcd
  McdOptions mcd;

  // Checks overrides against each owning type's invariants. Throws
  // kConfigError or kInvalidArgument.
  void Validate() const;
};

struct StageOutcome {
  bool skipped = false;  // ledger said inputs and outputs are unchanged
  int failures = 0;      // domain-level failures that did not abort the run
  std::vector<std::string> outputs;  // file names inside out_dir
  std::string message;
};

// Each stage reads its inputs, writes its outputs into cfg.out_dir in a
// fixed order and records itself in out_dir/run_ledger.json. A stage is
// skipped when its input digest and existing outputs match the ledger.
StageOutcome RunAnalyze(const PipelineConfig& cfg, const std::string& text_path);
StageOutcome RunStats(const PipelineConfig& cfg,
                      const std::string& sentences_path);
StageOutcome RunSelect(const PipelineConfig& cfg,
                       const std::string& sentences_path);
StageOutcome RunCurate(const PipelineConfig& cfg, const std::string& text_path);
StageOutcome RunQcStage(const PipelineConfig& cfg,
                        const std::string& manifest_path);
StageOutcome RunMcdStage(const PipelineConfig& cfg,
                         const std::string& pairs_path);
StageOutcome RunMosStage(const PipelineConfig& cfg,
                         const std::string& ratings_path);
StageOutcome RunDmosStage(const PipelineConfig& cfg,
                          const std::string& ratings_path);

// `id<TAB>text` lines, or bare text lines numbered "line000001"...
// Blank lines are skipped.
std::vector<TextItem> ReadTextItems(const std::string& path);

}  // namespace ttscorpus

#endif  // TTSCORPUS_PIPELINE_H_
