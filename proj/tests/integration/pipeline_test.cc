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

#include "ttscorpus/pipeline.h"

#include <gtest/gtest.h>
#include <omp.h>

#include <filesystem>

#include "test_util.h"
#include "ttscorpus/error.h"
#include "ttscorpus/serialize.h"

namespace ttscorpus {
namespace {

namespace fs = std::filesystem;
using testing::ReadText;
using testing::SourcePath;
using testing::WriteText;

PipelineConfig BaseConfig(const std::string& out_dir) {
  PipelineConfig cfg;
  cfg.language_config = SourcePath("data/configs/hindi.cfg");
  cfg.out_dir = out_dir;
  return cfg;
}

std::vector<Json> Lines(const std::string& path) {
  return ParseJsonLines(ReadText(path));
}

TEST(PipelineTest, AnalyzeThreeSentences) {
  const std::string dir = testing::TempDir("pipe_analyze");
  WriteText(dir + "/in.txt",
            "s1\tभारत देश\ns2\tहम घर गए।\n\ns3\tयह किताब अच्छी है\n");
  const StageOutcome out = RunAnalyze(BaseConfig(dir), dir + "/in.txt");
  EXPECT_FALSE(out.skipped);
  EXPECT_EQ(out.failures, 0);
  const auto recs = Lines(dir + "/sentences.jsonl");
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0]["id"], "s1");
  EXPECT_EQ(recs[2]["id"], "s3");
  EXPECT_TRUE(Lines(dir + "/rejects.jsonl").empty());
  EXPECT_TRUE(fs::exists(dir + "/run_ledger.json"));
}

TEST(PipelineTest, StrictRejectsLatin) {
  const std::string dir = testing::TempDir("pipe_strict");
  WriteText(dir + "/in.txt", "भारत देश\nभारत abc देश\n");
  PipelineConfig cfg = BaseConfig(dir);
  const StageOutcome strict = RunAnalyze(cfg, dir + "/in.txt");
  EXPECT_EQ(strict.failures, 1);
  EXPECT_EQ(Lines(dir + "/sentences.jsonl").size(), 1u);
  const auto rej = Lines(dir + "/rejects.jsonl");
  ASSERT_EQ(rej.size(), 1u);
  EXPECT_EQ(rej[0]["id"], "line000002");
  EXPECT_EQ(rej[0]["reason"], "UnknownCodepoint");

  cfg.mode = ParseMode::kLenient;
  const StageOutcome lenient = RunAnalyze(cfg, dir + "/in.txt");
  EXPECT_FALSE(lenient.skipped);  // mode is part of the input digest
  EXPECT_EQ(Lines(dir + "/sentences.jsonl").size(), 2u);
}

TEST(PipelineTest, DuplicateIdsAreRejected) {
  const std::string dir = testing::TempDir("pipe_dup");
  WriteText(dir + "/in.txt", "a\tभारत\na\tदेश\n");
  RunAnalyze(BaseConfig(dir), dir + "/in.txt");
  const auto rej = Lines(dir + "/rejects.jsonl");
  ASSERT_EQ(rej.size(), 1u);
  EXPECT_EQ(rej[0]["reason"], "DuplicateSentenceId");
}

TEST(PipelineTest, LedgerSkipsAndReruns) {
  const std::string dir = testing::TempDir("pipe_ledger");
  WriteText(dir + "/in.txt", "भारत देश\nहम घर गए\n");
  PipelineConfig cfg = BaseConfig(dir);
  EXPECT_FALSE(RunAnalyze(cfg, dir + "/in.txt").skipped);
  const std::string first = ReadText(dir + "/sentences.jsonl");
  EXPECT_TRUE(RunAnalyze(cfg, dir + "/in.txt").skipped);

  // Changed input.
  WriteText(dir + "/in.txt", "भारत देश\nहम घर गए\nनया वाक्य\n");
  EXPECT_FALSE(RunAnalyze(cfg, dir + "/in.txt").skipped);
  EXPECT_EQ(Lines(dir + "/sentences.jsonl").size(), 3u);
  EXPECT_TRUE(RunAnalyze(cfg, dir + "/in.txt").skipped);

  // Tampered output.
  WriteText(dir + "/sentences.jsonl", first);
  EXPECT_FALSE(RunAnalyze(cfg, dir + "/in.txt").skipped);
  EXPECT_EQ(Lines(dir + "/sentences.jsonl").size(), 3u);

  // Deleted output.
  fs::remove(dir + "/rejects.jsonl");
  EXPECT_FALSE(RunAnalyze(cfg, dir + "/in.txt").skipped);

  cfg.force = true;
  EXPECT_FALSE(RunAnalyze(cfg, dir + "/in.txt").skipped);

  // Stages are tracked independently.
  cfg.force = false;
  EXPECT_FALSE(RunStats(cfg, dir + "/sentences.jsonl").skipped);
  EXPECT_TRUE(RunAnalyze(cfg, dir + "/in.txt").skipped);
  EXPECT_TRUE(RunStats(cfg, dir + "/sentences.jsonl").skipped);
}

TEST(PipelineTest, MissingConfigIsConfigError) {
  const std::string dir = testing::TempDir("pipe_cfg");
  WriteText(dir + "/in.txt", "भारत\n");
  PipelineConfig cfg = BaseConfig(dir);
  cfg.language_config = dir + "/nope.cfg";
  try {
    RunAnalyze(cfg, dir + "/in.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfigError);
  }
}

TEST(PipelineTest, EmptyManifest) {
  const std::string dir = testing::TempDir("pipe_qc_empty");
  WriteText(dir + "/manifest.tsv", "");
  try {
    RunQcStage(BaseConfig(dir), dir + "/manifest.tsv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

TEST(PipelineTest, ConfigValidation) {
  PipelineConfig cfg;
  cfg.stop = TargetCoverage{1.5};
  EXPECT_THROW(cfg.Validate(), Error);
  cfg.stop = Budget{-1};
  EXPECT_THROW(cfg.Validate(), Error);
  cfg.stop = Budget{0};
  EXPECT_NO_THROW(cfg.Validate());
}

// Runs every stage on the toy corpus into `dir`.
void RunToy(const std::string& dir) {
  PipelineConfig cfg = BaseConfig(dir);
  cfg.lexicon_path = SourcePath("data/toy/lexicon.tsv");
  cfg.keywords_path = SourcePath("data/toy/keywords.txt");
  cfg.word_freq_corpus = SourcePath("data/toy/corpus.txt");
  RunAnalyze(cfg, SourcePath("data/toy/corpus.txt"));
  RunStats(cfg, dir + "/sentences.jsonl");
  RunSelect(cfg, dir + "/sentences.jsonl");
  RunCurate(cfg, dir + "/script.tsv");
  RunQcStage(cfg, SourcePath("data/toy/manifest.tsv"));
  RunMcdStage(cfg, SourcePath("data/toy/pairs.tsv"));
  RunMosStage(cfg, SourcePath("data/toy/ratings.csv"));
  RunDmosStage(cfg, SourcePath("data/toy/ratings.csv"));
}

std::map<std::string, std::string> Outputs(const std::string& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (name == "run_ledger.json") continue;
    out[name] = ReadText(e.path().string());
  }
  return out;
}

TEST(PipelineTest, ToyRunIsDeterministicAcrossThreadCounts) {
  const int saved = omp_get_max_threads();
  const std::string a = testing::TempDir("pipe_toy_a");
  const std::string b = testing::TempDir("pipe_toy_b");
  omp_set_num_threads(1);
  RunToy(a);
  omp_set_num_threads(4);
  RunToy(b);
  omp_set_num_threads(saved);
  const auto oa = Outputs(a);
  const auto ob = Outputs(b);
  EXPECT_GE(oa.size(), 20u);
  ASSERT_EQ(oa.size(), ob.size());
  for (const auto& [name, bytes] : oa) {
    ASSERT_TRUE(ob.count(name)) << name;
    EXPECT_EQ(bytes, ob.at(name)) << name;
  }
}

TEST(PipelineTest, ToyOutputsHaveExpectedShape) {
  const std::string dir = testing::TempDir("pipe_toy_shape");
  RunToy(dir);
  const auto qc = Lines(dir + "/qc_reports.jsonl");
  ASSERT_EQ(qc.size(), 5u);
  EXPECT_EQ(qc[0]["utt_id"], "utt01");
  const std::string script = ReadText(dir + "/script.tsv");
  EXPECT_FALSE(script.empty());
  const auto mcd = Json::parse(ReadText(dir + "/mcd_report.json"));
  EXPECT_FALSE(mcd.empty());
  EXPECT_NE(ReadText(dir + "/dmos_table.txt").find("sysA"), std::string::npos);
  // Curated script rows carry only letters, spaces, commas and full stops.
  const std::string curated = ReadText(dir + "/curated.txt");
  EXPECT_EQ(curated.find(';'), std::string::npos);
  EXPECT_EQ(curated.find('!'), std::string::npos);
}

TEST(ReadTextItemsTest, Formats) {
  const std::string dir = testing::TempDir("pipe_items");
  WriteText(dir + "/a.txt", "x\tभारत\n\nदेश\r\n");
  const auto items = ReadTextItems(dir + "/a.txt");
  ASSERT_EQ(items.size(), 2u);
  EXPECT_EQ(items[0].id, "x");
  EXPECT_EQ(items[0].text, "भारत");
  EXPECT_EQ(items[1].id, "line000003");
  EXPECT_EQ(items[1].text, "देश");
}

}  // namespace
}  // namespace ttscorpus
