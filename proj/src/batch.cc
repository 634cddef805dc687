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

#include "ttscorpus/batch.h"

#include <omp.h>

#include "ttscorpus/error.h"
#include "ttscorpus/wav.h"

namespace ttscorpus {

namespace {

long Signed(std::size_t n) { return static_cast<long>(n); }

McdPairResult RunMcdJob(const McdJob& job, const McdOptions& opt) {
  McdPairResult r;
  r.job = job;
  try {
    r.mcd = MelCepstralDistortion(ReadWav(job.ref_path), ReadWav(job.syn_path),
                                  opt);
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

std::vector<Analysis> AnalyzeBatch(const std::vector<TextItem>& items,
                                   const LanguageConfig& cfg, ParseMode mode) {
  std::vector<Analysis> out(items.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < Signed(items.size()); ++i) {
    out[i] = AnalyzeSentence(items[i].id, items[i].text, cfg, mode);
  }
  return out;
}

std::vector<Analysis> AnalyzeBatchSerial(const std::vector<TextItem>& items,
                                         const LanguageConfig& cfg,
                                         ParseMode mode) {
  std::vector<Analysis> out;
  out.reserve(items.size());
  for (const auto& it : items) {
    out.push_back(AnalyzeSentence(it.id, it.text, cfg, mode));
  }
  return out;
}

CorpusStats AccumulateBatch(const std::vector<SentenceRecord>& records) {
  std::vector<CorpusStats> shards(omp_get_max_threads());
  std::vector<std::string> errors(shards.size());
#pragma omp parallel
  {
    const int tid = omp_get_thread_num();
#pragma omp for schedule(static)
    for (long i = 0; i < Signed(records.size()); ++i) {
      if (!errors[tid].empty()) continue;
      try {
        shards[tid].Accumulate(records[i]);
      } catch (const Error&) {
        errors[tid] = records[i].id;
      }
    }
  }
  for (const auto& id : errors) {
    if (!id.empty()) {
      throw Error(ErrorCode::kDuplicateSentenceId, "sentence id " + id);
    }
  }
  CorpusStats total;
  for (const auto& s : shards) total.Merge(s);
  return total;
}

CorpusStats AccumulateBatchSerial(const std::vector<SentenceRecord>& records) {
  CorpusStats total;
  for (const auto& r : records) total.Accumulate(r);
  return total;
}

QcReport RunQcJob(const QcJob& job, const QcOptions& opt) {
  QcReport r;
  try {
    r = RunQc(job.utt_id, job.syllable_count, ReadWav(job.wav_path), opt);
  } catch (const Error& e) {
    r = QcReport{};
    r.utt_id = job.utt_id;
    r.syllable_count = job.syllable_count;
    r.error = e.what();
    r.format_ok = false;
  }
  if (!job.text_error.empty()) {
    r.error = r.error.empty() ? job.text_error : r.error + "; " + job.text_error;
  }
  DeriveVerdict(&r, opt.thresholds, opt.strict);
  return r;
}

std::vector<QcReport> QcBatch(const std::vector<QcJob>& jobs,
                              const QcOptions& opt) {
  std::vector<QcReport> out(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < Signed(jobs.size()); ++i) {
    out[i] = RunQcJob(jobs[i], opt);
  }
  return out;
}

std::vector<QcReport> QcBatchSerial(const std::vector<QcJob>& jobs,
                                    const QcOptions& opt) {
  std::vector<QcReport> out;
  out.reserve(jobs.size());
  for (const auto& j : jobs) out.push_back(RunQcJob(j, opt));
  return out;
}

std::vector<McdPairResult> McdBatch(const std::vector<McdJob>& jobs,
                                    const McdOptions& opt) {
  std::vector<McdPairResult> out(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < Signed(jobs.size()); ++i) {
    out[i] = RunMcdJob(jobs[i], opt);
  }
  return out;
}

std::vector<McdPairResult> McdBatchSerial(const std::vector<McdJob>& jobs,
                                          const McdOptions& opt) {
  std::vector<McdPairResult> out;
  out.reserve(jobs.size());
  for (const auto& j : jobs) out.push_back(RunMcdJob(j, opt));
  return out;
}

}  // namespace ttscorpus
