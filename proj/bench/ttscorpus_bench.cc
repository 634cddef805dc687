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

// Parallel kernels against their serial reference twins.

#include <benchmark/benchmark.h>

#include <random>

#include "test_util.h"
#include "ttscorpus/batch.h"
#include "ttscorpus/dtw.h"
#include "ttscorpus/mel_cepstrum.h"
#include "ttscorpus/selector.h"

namespace ttscorpus {
namespace {

const std::vector<TextItem>& Items() {
  static const std::vector<TextItem> items = [] {
    std::mt19937 rng(1);
    std::vector<TextItem> out;
    for (int i = 0; i < 4000; ++i) {
      std::string text;
      const int words = 5 + rng() % 10;
      for (int w = 0; w < words; ++w) {
        if (w) text += ' ';
        text += testing::RandomWord(testing::Hindi(), rng);
      }
      out.push_back({"b" + std::to_string(i), text});
    }
    return out;
  }();
  return items;
}

const std::vector<SentenceRecord>& Pool() {
  static const std::vector<SentenceRecord> pool = [] {
    std::vector<SentenceRecord> out;
    for (const auto& a :
         AnalyzeBatchSerial(Items(), testing::Hindi(), ParseMode::kStrict)) {
      if (const auto* r = std::get_if<SentenceRecord>(&a)) out.push_back(*r);
    }
    return out;
  }();
  return pool;
}

const AudioBuffer& Speechish() {
  static const AudioBuffer buf = testing::Buffer(
      testing::Concat({testing::Voiced(2.0, 16000, 110),
                       testing::Voiced(2.0, 16000, 170)}),
      16000);
  return buf;
}

void BM_Analyze(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        AnalyzeBatch(Items(), testing::Hindi(), ParseMode::kStrict));
  }
}
void BM_AnalyzeSerial(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        AnalyzeBatchSerial(Items(), testing::Hindi(), ParseMode::kStrict));
  }
}

void BM_Accumulate(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(AccumulateBatch(Pool()));
}
void BM_AccumulateSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(AccumulateBatchSerial(Pool()));
}

void BM_Greedy(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(GreedySelect(Pool(), Budget{200}));
  }
}
void BM_GreedySerial(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(GreedySelectSerial(Pool(), Budget{200}));
  }
}

void BM_MelCepstra(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(MelCepstra(Speechish()));
}
void BM_MelCepstraSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(MelCepstraSerial(Speechish()));
}

void BM_Dtw(benchmark::State& st) {
  const auto a = MelCepstraSerial(Speechish()).frames;
  const Eigen::MatrixXd b = a.topRows(a.rows() * 3 / 4);
  for (auto _ : st) benchmark::DoNotOptimize(DtwAlign(a, b));
}
void BM_DtwSerial(benchmark::State& st) {
  const auto a = MelCepstraSerial(Speechish()).frames;
  const Eigen::MatrixXd b = a.topRows(a.rows() * 3 / 4);
  for (auto _ : st) benchmark::DoNotOptimize(DtwAlignSerial(a, b));
}

BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AnalyzeSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Accumulate)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AccumulateSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Greedy)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GreedySerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MelCepstra)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MelCepstraSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Dtw)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DtwSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace ttscorpus

BENCHMARK_MAIN();
