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

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ttscorpus/corpus_stats.h"
#include "ttscorpus/curation.h"
#include "ttscorpus/error.h"
#include "ttscorpus/ledger.h"
#include "ttscorpus/ratings.h"
#include "ttscorpus/serialize.h"
#include "ttscorpus/summary.h"

namespace ttscorpus {

namespace fs = std::filesystem;

namespace {

constexpr char kLedgerName[] = "run_ledger.json";

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto tab = line.find('\t', pos);
    out.push_back(line.substr(pos, tab - pos));
    if (tab == std::string::npos) break;
    pos = tab + 1;
  }
  return out;
}

bool Blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Fixed(double v, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

struct StageInput {
  std::string label;
  std::string path;
  bool is_config = false;  // missing file is a config error
};

struct StageBody {
  std::map<std::string, std::string> files;
  int failures = 0;
  std::string message;
};

StageOutcome ExecuteStage(const PipelineConfig& cfg, const std::string& stage,
                          const std::vector<StageInput>& inputs,
                          const Json& params,
                          const std::vector<std::string>& outputs,
                          const std::function<StageBody()>& body) {
  // Resolve every path before doing any work.
  for (const auto& in : inputs) {
    if (!fs::is_regular_file(in.path)) {
      throw Error(in.is_config ? ErrorCode::kConfigError : ErrorCode::kIoError,
                  "cannot open " + in.label + " " + in.path);
    }
  }
  Digest in_digest;
  in_digest.Add(kToolVersion);
  in_digest.Add(stage);
  in_digest.Add(params.dump());
  for (const auto& in : inputs) in_digest.AddFile(in.label, in.path);
  const std::string input_hex = in_digest.Hex();

  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (!fs::is_directory(cfg.out_dir)) {
    throw Error(ErrorCode::kIoError, "cannot create output dir " + cfg.out_dir);
  }
  const std::string ledger_path = (fs::path(cfg.out_dir) / kLedgerName).string();
  RunLedger ledger = RunLedger::Load(ledger_path);

  auto output_digest = [&](const std::function<std::string(const std::string&)>&
                               content_of) {
    Digest d;
    for (const auto& name : outputs) {
      d.Add(name);
      d.Add(content_of(name));
    }
    return d.Hex();
  };

  const auto it = ledger.stages.find(stage);
  if (!cfg.force && it != ledger.stages.end() &&
      it->second.input_digest == input_hex &&
      it->second.tool_version == kToolVersion) {
    bool present = true;
    for (const auto& name : outputs) {
      present = present && fs::is_regular_file(fs::path(cfg.out_dir) / name);
    }
    if (present &&
        output_digest([&](const std::string& name) {
          return ReadFile((fs::path(cfg.out_dir) / name).string());
        }) == it->second.output_digest) {
      StageOutcome o;
      o.skipped = true;
      o.failures = it->second.failures;
      o.outputs = outputs;
      o.message = it->second.message;
      return o;
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  StageBody result = body();
  for (const auto& name : outputs) {
    const fs::path target = fs::path(cfg.out_dir) / name;
    const fs::path tmp = target.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
      out << result.files[name];
    }
    fs::rename(tmp, target);
  }
  const auto t1 = std::chrono::steady_clock::now();

  StageEntry entry;
  entry.input_digest = input_hex;
  entry.output_digest =
      output_digest([&](const std::string& name) { return result.files[name]; });
  entry.tool_version = kToolVersion;
  entry.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
  entry.failures = result.failures;
  entry.message = result.message;
  ledger.stages[stage] = entry;
  ledger.Save(ledger_path);

  StageOutcome o;
  o.failures = result.failures;
  o.outputs = outputs;
  o.message = result.message;
  return o;
}

std::vector<StageInput> WithConfig(const PipelineConfig& cfg,
                                   std::vector<StageInput> inputs) {
  if (cfg.language_config.empty()) {
    throw Error(ErrorCode::kConfigError, "--config is required for this stage");
  }
  inputs.insert(inputs.begin(), {"language-config", cfg.language_config, true});
  return inputs;
}

std::vector<SentenceRecord> LoadRecords(const std::string& path) {
  std::vector<SentenceRecord> out;
  for (const auto& j : ParseJsonLines(ReadFile(path))) {
    out.push_back(SentenceRecordFromJson(j));
  }
  return out;
}

std::string JsonLines(const std::vector<Json>& rows) {
  std::string out;
  for (const auto& r : rows) out += DumpLine(r);
  return out;
}

std::string Pretty(const Json& j) {
  return j.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

std::string RankedCsv(const std::string& unit_name,
                      const std::map<std::string, std::int64_t>& freq) {
  std::string out = unit_name + ",count,rank\n";
  for (const auto& r : RankByFrequency(freq)) {
    out += CsvField(r.unit) + "," + std::to_string(r.count) + "," +
           std::to_string(r.rank) + "\n";
  }
  return out;
}

std::string WeakCsv(const std::vector<WeakPhone>& rows) {
  std::string out = "phone,count,sentences\n";
  for (const auto& w : rows) {
    out += CsvField(w.phone) + "," + std::to_string(w.count) + "," +
           std::to_string(w.sentences) + "\n";
  }
  return out;
}

Json ThresholdsJson(const QcThresholds& t) {
  Json j;
  j["rate_min"] = t.rate_min;
  j["rate_max"] = t.rate_max;
  j["silence_floor_db"] = t.silence_floor_db;
  j["pause_min_ms"] = t.pause_min_ms;
  j["clip_level"] = t.clip_level;
  j["clip_ratio_max"] = t.clip_ratio_max;
  j["frame_ms"] = t.frame_ms;
  j["hop_ms"] = t.hop_ms;
  return j;
}

Json SpecJson(const AudioSpec& s) {
  Json j;
  j["sample_rate"] = s.sample_rate;
  j["bit_depth"] = s.bit_depth;
  j["channels"] = s.channels;
  return j;
}

std::string ModeName(ParseMode m) {
  return m == ParseMode::kStrict ? "strict" : "lenient";
}

fs::path BaseDir(const std::string& path) {
  const fs::path p = fs::path(path).parent_path();
  return p.empty() ? fs::path(".") : p;
}

}  // namespace

void PipelineConfig::Validate() const {
  constraints.Validate();
  policy.Validate();
  thresholds.Validate();
  mcd.cepstrum.Validate();
  if (const auto* b = std::get_if<Budget>(&stop); b && b->sentences < 0) {
    throw Error(ErrorCode::kInvalidArgument, "budget must not be negative");
  }
  if (const auto* t = std::get_if<TargetCoverage>(&stop);
      t && !(t->fraction > 0.0 && t->fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "target coverage must lie in (0, 1]");
  }
  if (zipf_min_count < 1 || min_word_count < 0) {
    throw Error(ErrorCode::kInvalidArgument, "counts must be positive");
  }
  if (mcd.dtw.band && *mcd.dtw.band < 0) {
    throw Error(ErrorCode::kInvalidArgument, "DTW band must be >= 0");
  }
  if (out_dir.empty()) {
    throw Error(ErrorCode::kConfigError, "output directory is empty");
  }
}

std::vector<TextItem> ReadTextItems(const std::string& path) {
  std::vector<TextItem> items;
  int n = 0;
  for (const auto& line : Lines(ReadFile(path))) {
    ++n;
    if (Blank(line)) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      char id[24];
      std::snprintf(id, sizeof(id), "line%06d", n);
      items.push_back({id, line});
    } else {
      items.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
  }
  return items;
}

StageOutcome RunAnalyze(const PipelineConfig& cfg,
                        const std::string& text_path) {
  Json params;
  params["mode"] = ModeName(cfg.mode);
  return ExecuteStage(
      cfg, "analyze", WithConfig(cfg, {{"text", text_path}}), params,
      {"sentences.jsonl", "rejects.jsonl"}, [&] {
        const LanguageConfig lang = LoadLanguageConfig(cfg.language_config);
        const auto items = ReadTextItems(text_path);
        const auto results = AnalyzeBatch(items, lang, cfg.mode);
        std::set<std::string> seen;
        std::vector<Json> good, bad;
        for (std::size_t i = 0; i < results.size(); ++i) {
          if (!seen.insert(items[i].id).second) {
            bad.push_back(ToJson(Rejection{items[i].id,
                                           ErrorCode::kDuplicateSentenceId,
                                           "id already used earlier"}));
          } else if (const auto* rec = std::get_if<SentenceRecord>(&results[i])) {
            good.push_back(ToJson(*rec));
          } else {
            bad.push_back(ToJson(std::get<Rejection>(results[i])));
          }
        }
        StageBody b;
        b.files["sentences.jsonl"] = JsonLines(good);
        b.files["rejects.jsonl"] = JsonLines(bad);
        b.failures = static_cast<int>(bad.size());
        b.message = std::to_string(good.size()) + " records, " +
                    std::to_string(bad.size()) + " rejects";
        return b;
      });
}

StageOutcome RunStats(const PipelineConfig& cfg,
                      const std::string& sentences_path) {
  Json params;
  params["zipf_min_count"] = cfg.zipf_min_count;
  params["weak_k"] = cfg.policy.weak_k;
  std::vector<StageInput> inputs = {{"sentences", sentences_path}};
  if (!cfg.language_config.empty()) inputs = WithConfig(cfg, inputs);
  return ExecuteStage(
      cfg, "stats", inputs, params,
      {"syllable_freq.csv", "phone_freq.csv", "weak_phones.csv",
       "stats_report.json"},
      [&] {
        const auto records = LoadRecords(sentences_path);
        const CorpusStats stats = AccumulateBatch(records);
        std::set<std::string> inventory;
        if (!cfg.language_config.empty()) {
          inventory = LoadLanguageConfig(cfg.language_config).phone_inventory;
        }
        const auto weak = WeakPhones(stats, cfg.policy.weak_k, inventory);

        std::int64_t syl_tokens = 0, phone_tokens = 0;
        for (const auto& [k, v] : stats.syllable_freq) syl_tokens += v;
        for (const auto& [k, v] : stats.phone_freq) phone_tokens += v;
        Json rep;
        rep["sentence_count"] = stats.sentence_count();
        rep["syllable_tokens"] = syl_tokens;
        rep["distinct_syllables"] = stats.syllable_freq.size();
        rep["phone_tokens"] = phone_tokens;
        rep["distinct_phones"] = stats.phone_freq.size();
        try {
          rep["zipf"] = ToJson(FitZipf(stats, cfg.zipf_min_count));
        } catch (const Error& e) {
          rep["zipf"] = nullptr;
          rep["zipf_error"] = e.what();
        }
        rep["weak_k"] = cfg.policy.weak_k;
        Json wj = Json::array();
        for (const auto& w : weak) wj.push_back(ToJson(w));
        rep["weak_phones"] = std::move(wj);

        StageBody b;
        b.files["syllable_freq.csv"] = RankedCsv("syllable", stats.syllable_freq);
        b.files["phone_freq.csv"] = RankedCsv("phone", stats.phone_freq);
        b.files["weak_phones.csv"] = WeakCsv(weak);
        b.files["stats_report.json"] = Pretty(rep);
        b.message = std::to_string(stats.sentence_count()) + " sentences, " +
                    std::to_string(stats.syllable_freq.size()) +
                    " distinct syllables";
        return b;
      });
}

StageOutcome RunSelect(const PipelineConfig& cfg,
                       const std::string& sentences_path) {
  Json params;
  params["min_words"] = cfg.constraints.min_words;
  params["max_words"] = cfg.constraints.max_words;
  params["max_syllables_per_word"] = cfg.constraints.max_syllables_per_word;
  params["weak_k"] = cfg.policy.weak_k;
  params["weak_target"] = cfg.policy.target_sentences_per_weak_phone;
  if (const auto* b = std::get_if<Budget>(&cfg.stop)) {
    params["budget"] = b->sentences;
  } else {
    params["target_coverage"] = std::get<TargetCoverage>(cfg.stop).fraction;
  }
  return ExecuteStage(
      cfg, "select", {{"sentences", sentences_path}}, params,
      {"script.tsv", "selection_report.json", "weak_phones_before.csv",
       "weak_phones_after.csv"},
      [&] {
        const auto records = LoadRecords(sentences_path);
        std::vector<SentenceRecord> recordable;
        Json rejected = Json::array();
        for (const auto& r : records) {
          if (r.needs_normalization) {
            rejected.push_back({{"id", r.id}, {"reason", "NeedsNormalization"}});
          } else {
            recordable.push_back(r);
          }
        }
        FilterResult fr = Filter(recordable, cfg.constraints);
        for (const auto& r : fr.rejected) {
          rejected.push_back(
              {{"id", r.id}, {"reason", std::string(FilterReasonName(r.reason))}});
        }
        const auto& pool = fr.accepted;
        const SelectionResult greedy = GreedySelect(pool, cfg.stop);
        const CorpusStats sel_stats = StatsOf(pool, greedy.selected_ids);

        std::set<std::string> pool_phones;
        for (const auto& r : pool) {
          pool_phones.insert(r.phones.begin(), r.phones.end());
        }
        const auto before = WeakPhones(sel_stats, cfg.policy.weak_k, pool_phones);
        const SelectionResult final_sel =
            AugmentWeak(greedy, pool, sel_stats, cfg.policy);
        const CorpusStats final_stats = StatsOf(pool, final_sel.selected_ids);
        std::vector<WeakPhone> after;
        for (const auto& w : before) {
          WeakPhone a{w.phone, 0, 0};
          if (auto f = final_stats.phone_freq.find(w.phone);
              f != final_stats.phone_freq.end()) {
            a.count = f->second;
          }
          if (auto p = final_stats.postings.find(w.phone);
              p != final_stats.postings.end()) {
            a.sentences = static_cast<std::int64_t>(p->second.size());
          }
          after.push_back(a);
        }

        std::map<std::string, const SentenceRecord*> by_id;
        for (const auto& r : pool) by_id[r.id] = &r;
        std::string script;
        for (const auto& id : final_sel.selected_ids) {
          script += id + "\t" + by_id.at(id)->raw_text + "\n";
        }

        Json rep;
        rep["pool_size"] = records.size();
        rep["accepted"] = pool.size();
        rep["rejected"] = std::move(rejected);
        rep["parameters"] = params;
        rep["greedy_selected"] = greedy.selected_ids.size();
        rep["greedy_coverage_ratio"] = greedy.coverage_ratio;
        rep["selection"] = ToJson(final_sel);
        Json bj = Json::array(), aj = Json::array();
        for (const auto& w : before) bj.push_back(ToJson(w));
        for (const auto& w : after) aj.push_back(ToJson(w));
        rep["weak_phones_before"] = std::move(bj);
        rep["weak_phones_after"] = std::move(aj);

        StageBody b;
        b.files["script.tsv"] = script;
        b.files["selection_report.json"] = Pretty(rep);
        b.files["weak_phones_before.csv"] = WeakCsv(before);
        b.files["weak_phones_after.csv"] = WeakCsv(after);
        b.message = std::to_string(final_sel.selected_ids.size()) +
                    " sentences selected, coverage " +
                    Fixed(final_sel.coverage_ratio, 4);
        for (const auto& w : final_sel.warnings) b.message += "; " + w;
        return b;
      });
}

StageOutcome RunCurate(const PipelineConfig& cfg, const std::string& text_path) {
  Json params;
  params["max_syllables_per_word"] = cfg.constraints.max_syllables_per_word;
  params["min_word_count"] = cfg.min_word_count;
  std::vector<StageInput> inputs = {{"text", text_path}};
  if (!cfg.lexicon_path.empty()) {
    inputs.push_back({"lexicon", cfg.lexicon_path, true});
  }
  if (!cfg.keywords_path.empty()) {
    inputs.push_back({"keywords", cfg.keywords_path, true});
  }
  if (!cfg.word_freq_corpus.empty()) {
    inputs.push_back({"word-freq-corpus", cfg.word_freq_corpus});
  }
  return ExecuteStage(
      cfg, "curate", WithConfig(cfg, inputs), params,
      {"curation.jsonl", "curated.txt"}, [&] {
        const LanguageConfig lang = LoadLanguageConfig(cfg.language_config);
        CurationResources res;
        if (!cfg.lexicon_path.empty()) res.lexicon = LoadLexicon(cfg.lexicon_path);
        if (!cfg.keywords_path.empty()) {
          res.keywords = LoadKeywords(cfg.keywords_path);
        }
        res.max_syllables_per_word = cfg.constraints.max_syllables_per_word;
        res.min_word_count = cfg.min_word_count;
        if (!cfg.word_freq_corpus.empty()) {
          for (const auto& it : ReadTextItems(cfg.word_freq_corpus)) {
            for (const auto& w : SplitWords(it.text)) {
              if (!w.core.empty()) ++res.word_freq[w.core];
            }
          }
        }
        const auto items = ReadTextItems(text_path);
        std::vector<CurationVerdict> verdicts(items.size());
#pragma omp parallel for schedule(dynamic, 16)
        for (long i = 0; i < static_cast<long>(items.size()); ++i) {
          verdicts[i] = Curate(items[i].id, items[i].text, lang, res);
        }
        StageBody b;
        std::string jsonl, curated;
        int fixes = 0;
        for (const auto& v : verdicts) {
          jsonl += DumpLine(ToJson(v));
          curated += v.sentence_id + "\t" + v.normalized_text + "\n";
          if (v.NeedsHuman()) ++b.failures;
          fixes += v.CountFixes();
        }
        b.files["curation.jsonl"] = jsonl;
        b.files["curated.txt"] = curated;
        b.message = std::to_string(verdicts.size()) + " sentences, " +
                    std::to_string(fixes) + " fixes applied, " +
                    std::to_string(b.failures) + " need human review";
        return b;
      });
}

StageOutcome RunQcStage(const PipelineConfig& cfg,
                        const std::string& manifest_path) {
  struct Row {
    std::string utt_id, rel, text;
  };
  // The manifest is parsed up front so every referenced wav feeds the
  // input digest.
  if (!fs::is_regular_file(manifest_path)) {
    throw Error(ErrorCode::kIoError, "cannot open manifest " + manifest_path);
  }
  std::vector<Row> rows;
  int n = 0;
  for (const auto& line : Lines(ReadFile(manifest_path))) {
    ++n;
    if (Blank(line)) continue;
    auto f = SplitTabs(line);
    if (f.size() != 3) {
      throw Error(ErrorCode::kParseError,
                  manifest_path + " line " + std::to_string(n) +
                      ": expected utt_id<TAB>path<TAB>text");
    }
    rows.push_back({f[0], f[1], f[2]});
  }
  if (rows.empty()) {
    throw Error(ErrorCode::kEmptyInput, "manifest has no entries");
  }
  const fs::path root =
      cfg.audio_root.empty() ? BaseDir(manifest_path) : fs::path(cfg.audio_root);

  Json params;
  params["mode"] = ModeName(cfg.mode);
  params["thresholds"] = ThresholdsJson(cfg.thresholds);
  params["expected"] = SpecJson(cfg.expected);
  std::vector<StageInput> inputs = {{"manifest", manifest_path}};
  for (const auto& r : rows) {
    inputs.push_back({r.rel, (root / r.rel).string()});
  }
  return ExecuteStage(
      cfg, "qc", WithConfig(cfg, inputs), params,
      {"qc_reports.jsonl", "qc_summary.json"}, [&] {
        const LanguageConfig lang = LoadLanguageConfig(cfg.language_config);
        std::vector<QcJob> jobs;
        for (const auto& r : rows) {
          QcJob j;
          j.utt_id = r.utt_id;
          j.wav_path = (root / r.rel).string();
          const Analysis a = AnalyzeSentence(r.utt_id, r.text, lang, cfg.mode);
          if (const auto* rec = std::get_if<SentenceRecord>(&a)) {
            j.syllable_count = rec->syllable_count;
          } else {
            const auto& rej = std::get<Rejection>(a);
            j.text_error = "TranscriptRejected: " +
                           std::string(ErrorCodeName(rej.reason)) + " " +
                           rej.detail;
          }
          jobs.push_back(std::move(j));
        }
        QcOptions opt;
        opt.thresholds = cfg.thresholds;
        opt.expected = cfg.expected;
        opt.strict = cfg.mode == ParseMode::kStrict;
        const auto reports = QcBatch(jobs, opt);

        StageBody b;
        std::string jsonl;
        int pass = 0, warn = 0, fail = 0;
        for (const auto& r : reports) {
          jsonl += DumpLine(ToJson(r));
          (r.verdict == Verdict::kPass   ? pass
           : r.verdict == Verdict::kWarn ? warn
                                         : fail)++;
        }
        Json sum;
        sum["files"] = reports.size();
        sum["pass"] = pass;
        sum["warn"] = warn;
        sum["fail"] = fail;
        try {
          const RateSummary rs = DatasetRateSummary(reports, cfg.thresholds);
          sum["syllable_rate"] = ToJson(rs);
          sum["syllable_rate_display"] = FormatMeanStd(rs.mean, rs.std);
        } catch (const Error& e) {
          sum["syllable_rate"] = nullptr;
          sum["syllable_rate_error"] = e.what();
        }
        sum["strict"] = opt.strict;
        sum["expected"] = SpecJson(cfg.expected);
        sum["thresholds"] = ThresholdsJson(cfg.thresholds);
        b.files["qc_reports.jsonl"] = jsonl;
        b.files["qc_summary.json"] = Pretty(sum);
        b.failures = fail;
        b.message = std::to_string(reports.size()) + " files: " +
                    std::to_string(pass) + " pass, " + std::to_string(warn) +
                    " warn, " + std::to_string(fail) + " fail";
        return b;
      });
}

StageOutcome RunMcdStage(const PipelineConfig& cfg,
                         const std::string& pairs_path) {
  if (!fs::is_regular_file(pairs_path)) {
    throw Error(ErrorCode::kIoError, "cannot open pairs file " + pairs_path);
  }
  struct Row {
    std::string ref, syn, system;
  };
  std::vector<Row> rows;
  int n = 0;
  for (const auto& line : Lines(ReadFile(pairs_path))) {
    ++n;
    if (Blank(line) || line[0] == '#') continue;
    auto f = SplitTabs(line);
    if (f.size() != 2 && f.size() != 3) {
      throw Error(ErrorCode::kParseError,
                  pairs_path + " line " + std::to_string(n) +
                      ": expected ref<TAB>syn[<TAB>system]");
    }
    rows.push_back({f[0], f[1], f.size() == 3 ? f[2] : "default"});
  }
  if (rows.empty()) throw Error(ErrorCode::kEmptyInput, "no pairs");
  const fs::path root = BaseDir(pairs_path);

  Json params;
  params["trim"] = cfg.mcd.trim;
  params["band"] = cfg.mcd.dtw.band ? Json(*cfg.mcd.dtw.band) : Json(nullptr);
  params["mel_bands"] = cfg.mcd.cepstrum.num_mel_bands;
  params["coeffs"] = cfg.mcd.cepstrum.num_coeffs;
  params["frame_ms"] = cfg.mcd.cepstrum.frame_ms;
  params["hop_ms"] = cfg.mcd.cepstrum.hop_ms;
  std::vector<StageInput> inputs = {{"pairs", pairs_path}};
  std::set<std::string> wavs;
  for (const auto& r : rows) {
    wavs.insert(r.ref);
    wavs.insert(r.syn);
  }
  for (const auto& w : wavs) inputs.push_back({w, (root / w).string()});

  return ExecuteStage(
      cfg, "mcd", inputs, params,
      {"mcd_pairs.tsv", "mcd_report.json", "mcd_table.txt"}, [&] {
        std::vector<McdJob> jobs;
        for (const auto& r : rows) {
          jobs.push_back({r.system, (root / r.ref).string(),
                          (root / r.syn).string()});
        }
        const auto results = McdBatch(jobs, cfg.mcd);
        StageBody b;
        std::string tsv = "system\tref\tsyn\tmcd_db\n";
        Json pairs = Json::array();
        std::map<std::string, std::vector<double>> per_system;
        for (std::size_t i = 0; i < results.size(); ++i) {
          McdPairResult shown = results[i];
          shown.job = {rows[i].system, rows[i].ref, rows[i].syn};
          pairs.push_back(ToJson(shown));
          tsv += rows[i].system + "\t" + rows[i].ref + "\t" + rows[i].syn + "\t";
          if (shown.error.empty()) {
            tsv += Fixed(shown.mcd) + "\n";
            per_system[rows[i].system].push_back(shown.mcd);
          } else {
            tsv += "error: " + shown.error + "\n";
            ++b.failures;
            per_system[rows[i].system];  // keep the system listed
          }
        }
        std::vector<MetricReport> reports;
        Json systems = Json::array();
        for (const auto& [sys, vals] : per_system) {
          if (vals.empty()) continue;
          reports.push_back(McdSummary(sys, vals));
          systems.push_back(ToJson(reports.back()));
        }
        if (reports.empty()) {
          throw Error(ErrorCode::kEmptyInput, "every MCD pair failed");
        }
        Json rep;
        rep["pairs"] = std::move(pairs);
        rep["systems"] = std::move(systems);
        b.files["mcd_pairs.tsv"] = tsv;
        b.files["mcd_report.json"] = Pretty(rep);
        b.files["mcd_table.txt"] = RenderMetricTable(reports);
        b.message = std::to_string(results.size()) + " pairs, " +
                    std::to_string(b.failures) + " failed";
        return b;
      });
}

namespace {

StageOutcome RatingsStage(
    const PipelineConfig& cfg, const std::string& ratings_path,
    const std::string& stage,
    const std::function<std::vector<MetricReport>(std::span<const Rating>)>&
        aggregate) {
  return ExecuteStage(
      cfg, stage, {{"ratings", ratings_path}}, Json::object(),
      {stage + "_report.json", stage + "_table.txt"}, [&] {
        const auto ratings = LoadRatingsCsv(ratings_path);
        const auto reports = aggregate(ratings);
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(ToJson(r));
        StageBody b;
        b.files[stage + "_report.json"] = Pretty(arr);
        b.files[stage + "_table.txt"] = RenderMetricTable(reports);
        b.message = std::to_string(reports.size()) + " systems from " +
                    std::to_string(ratings.size()) + " ratings";
        return b;
      });
}

}  // namespace

StageOutcome RunMosStage(const PipelineConfig& cfg,
                         const std::string& ratings_path) {
  return RatingsStage(cfg, ratings_path, "mos", [](std::span<const Rating> r) {
    return MosAggregateAll(r);
  });
}

StageOutcome RunDmosStage(const PipelineConfig& cfg,
                          const std::string& ratings_path) {
  return RatingsStage(cfg, ratings_path, "dmos", [](std::span<const Rating> r) {
    return DmosAggregateAll(r);
  });
}

}  // namespace ttscorpus
