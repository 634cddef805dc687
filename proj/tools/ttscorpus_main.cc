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

// Command-line entry point. Exit codes: 0 success, 1 domain failure (bad
// data, empty inputs, missing rating conditions), 2 usage or configuration
// error. Every long option can also be set through TTSC_<NAME>, e.g.
// TTSC_OUT_DIR or TTSC_RATE_MIN.

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ttscorpus/error.h"
#include "ttscorpus/pipeline.h"

namespace {

using ttscorpus::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfigError:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kIoError:
      return kExitUsage;
    default:
      return kExitDomain;
  }
}

void AddEnvNames(CLI::App* app) {
  for (CLI::Option* opt : app->get_options()) {
    const std::string& name = opt->get_single_name();
    if (opt->get_lnames().empty() || name == "help" || name == "version") {
      continue;
    }
    std::string env = "TTSC_";
    for (char c : name) {
      env += c == '-' ? '_' : static_cast<char>(std::toupper(c));
    }
    opt->envname(env);
  }
  for (CLI::App* sub : app->get_subcommands({})) AddEnvNames(sub);
}

void Report(const std::string& stage, const ttscorpus::StageOutcome& o,
            const std::string& out_dir) {
  std::cout << stage << ": " << o.message;
  if (o.skipped) std::cout << " (inputs unchanged, skipped)";
  std::cout << "\n";
  for (const auto& f : o.outputs) std::cout << "  " << out_dir << "/" << f << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  ttscorpus::PipelineConfig cfg;
  CLI::App app{
      "ttscorpus: recording-script selection, curation, audio QC and "
      "evaluation metrics for speech corpora"};
  app.set_version_flag("--version", std::string(ttscorpus::kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  bool strict = false, lenient = false;
  int jobs = 0;
  app.add_option("--config", cfg.language_config, "Language config file");
  auto* strict_opt = app.add_flag("--strict", strict, "Strict mode (default)");
  app.add_flag("--lenient", lenient,
               "Skip unmapped characters with a warning; QC format "
               "mismatches warn instead of failing")
      ->excludes(strict_opt);
  app.add_option("--out-dir", cfg.out_dir, "Output directory")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads, 0 = all cores")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_flag("--force", cfg.force, "Re-run even when the ledger is current");

  std::string input;
  auto* analyze = app.add_subcommand("analyze", "Text lines to sentence records");
  analyze->add_option("input", input, "id<TAB>text or plain text lines")
      ->required();

  auto* stats = app.add_subcommand("stats", "Frequency tables, Zipf fit, weak phones");
  stats->add_option("input", input, "sentences.jsonl")->required();
  stats->add_option("--zipf-min-count", cfg.zipf_min_count)->capture_default_str();
  stats->add_option("--weak-k", cfg.policy.weak_k)->capture_default_str();

  int budget = 0;
  double target = 1.0;
  auto* select = app.add_subcommand("select", "Coverage-driven script selection");
  select->add_option("input", input, "sentences.jsonl")->required();
  select->add_option("--min-words", cfg.constraints.min_words)->capture_default_str();
  select->add_option("--max-words", cfg.constraints.max_words)->capture_default_str();
  select->add_option("--max-syllables-per-word",
                     cfg.constraints.max_syllables_per_word)
      ->capture_default_str();
  select->add_option("--weak-k", cfg.policy.weak_k)->capture_default_str();
  select->add_option("--weak-target", cfg.policy.target_sentences_per_weak_phone,
                     "Sentences required per weak phone")
      ->capture_default_str();
  auto* budget_opt =
      select->add_option("--budget", budget, "Stop after this many sentences");
  select->add_option("--target-coverage", target,
                     "Stop at this fraction of the syllable inventory")
      ->excludes(budget_opt)
      ->capture_default_str();

  auto* curate = app.add_subcommand("curate", "Punctuation, lexicon and review flags");
  curate->add_option("input", input, "id<TAB>text or plain text lines")
      ->required();
  curate->add_option("--lexicon", cfg.lexicon_path, "token<TAB>expansion file");
  curate->add_option("--keywords", cfg.keywords_path, "Sensitive keyword list");
  curate->add_option("--word-freq-corpus", cfg.word_freq_corpus,
                     "Text used for the uncommon-word check");
  curate->add_option("--min-word-count", cfg.min_word_count)->capture_default_str();
  curate->add_option("--max-syllables-per-word",
                     cfg.constraints.max_syllables_per_word)
      ->capture_default_str();

  auto* qc = app.add_subcommand("qc", "Audio format, endpointing, rate and clipping");
  qc->add_option("input", input, "utt_id<TAB>wav<TAB>text manifest")->required();
  qc->add_option("--audio-root", cfg.audio_root, "Base for relative wav paths");
  qc->add_option("--rate-min", cfg.thresholds.rate_min)->capture_default_str();
  qc->add_option("--rate-max", cfg.thresholds.rate_max)->capture_default_str();
  qc->add_option("--silence-floor-db", cfg.thresholds.silence_floor_db)
      ->capture_default_str();
  qc->add_option("--pause-min-ms", cfg.thresholds.pause_min_ms)->capture_default_str();
  qc->add_option("--clip-level", cfg.thresholds.clip_level)->capture_default_str();
  qc->add_option("--clip-ratio-max", cfg.thresholds.clip_ratio_max)
      ->capture_default_str();
  qc->add_option("--expect-rate", cfg.expected.sample_rate)->capture_default_str();
  qc->add_option("--expect-bits", cfg.expected.bit_depth)->capture_default_str();
  qc->add_option("--expect-channels", cfg.expected.channels)->capture_default_str();

  bool no_trim = false;
  int band = -1;
  auto* mcd = app.add_subcommand("mcd", "Mel-cepstral distortion over wav pairs");
  mcd->add_option("input", input, "ref<TAB>syn[<TAB>system] pairs")->required();
  mcd->add_flag("--no-trim", no_trim, "Skip silence trimming before alignment");
  mcd->add_option("--band", band, "Sakoe-Chiba half-width in frames");
  mcd->add_option("--mel-bands", cfg.mcd.cepstrum.num_mel_bands)
      ->capture_default_str();
  mcd->add_option("--cepstra-dims", cfg.mcd.cepstrum.num_coeffs)
      ->capture_default_str();

  auto* mos = app.add_subcommand("mos", "MOS per system from a ratings CSV");
  mos->add_option("input", input, "evaluator,system,item,condition,score CSV")
      ->required();
  auto* dmos = app.add_subcommand("dmos", "Ground-truth normalized MOS");
  dmos->add_option("input", input, "evaluator,system,item,condition,score CSV")
      ->required();

  AddEnvNames(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  cfg.mode = lenient ? ttscorpus::ParseMode::kLenient
                     : ttscorpus::ParseMode::kStrict;
  (void)strict;
  if (select->count("--budget") > 0) {
    cfg.stop = ttscorpus::Budget{budget};
  } else {
    cfg.stop = ttscorpus::TargetCoverage{target};
  }
  cfg.mcd.trim = !no_trim;
  if (mcd->count("--band") > 0) cfg.mcd.dtw.band = band;
  if (jobs > 0) omp_set_num_threads(jobs);

  using Runner = std::function<ttscorpus::StageOutcome(
      const ttscorpus::PipelineConfig&, const std::string&)>;
  const std::pair<CLI::App*, Runner> table[] = {
      {analyze, ttscorpus::RunAnalyze}, {stats, ttscorpus::RunStats},
      {select, ttscorpus::RunSelect},   {curate, ttscorpus::RunCurate},
      {qc, ttscorpus::RunQcStage},      {mcd, ttscorpus::RunMcdStage},
      {mos, ttscorpus::RunMosStage},    {dmos, ttscorpus::RunDmosStage},
  };
  try {
    cfg.Validate();
    for (const auto& [sub, run] : table) {
      if (!sub->parsed()) continue;
      Report(sub->get_name(), run(cfg, input), cfg.out_dir);
    }
  } catch (const ttscorpus::Error& e) {
    std::cerr << "ttscorpus: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "ttscorpus: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
