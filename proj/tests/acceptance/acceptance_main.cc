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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.h"
#include "ttscorpus/audio_qc.h"
#include "ttscorpus/batch.h"
#include "ttscorpus/corpus_stats.h"
#include "ttscorpus/dtw.h"
#include "ttscorpus/error.h"
#include "ttscorpus/ratings.h"
#include "ttscorpus/script.h"
#include "ttscorpus/selector.h"
#include "ttscorpus/summary.h"
#include "ttscorpus/wav.h"

namespace ttscorpus {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using testing::Buffer;
using testing::Concat;
using testing::SourcePath;
using testing::Silence;
using testing::Voiced;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string Fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

// 1
Outcome SyllabifierOracle() {
  const auto t0 = Clock::now();
  std::ifstream in(SourcePath("tests/data/akshara_oracle.tsv"));
  std::set<std::string> languages;
  int rows = 0, matched = 0;
  std::string first_miss;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string lang, word, segs;
    std::getline(ls, lang, '\t');
    std::getline(ls, word, '\t');
    std::getline(ls, segs);
    std::vector<std::string> want;
    std::istringstream ss(segs);
    for (std::string s; ss >> s;) want.push_back(s);
    std::vector<std::string> got;
    try {
      for (const auto& a : Syllabify(word, testing::Config(lang))) {
        got.push_back(a.text);
      }
    } catch (const Error&) {
    }
    ++rows;
    languages.insert(lang);
    if (got == want) {
      ++matched;
    } else if (first_miss.empty()) {
      first_miss = lang + ":" + word;
    }
  }
  const double s = Seconds(t0);
  Outcome o;
  o.pass = rows >= 50 && languages.size() >= 3 && matched == rows && s < 1.0;
  o.detail = std::to_string(matched) + "/" + std::to_string(rows) +
             " words over " + std::to_string(languages.size()) +
             " scripts in " + Fmt("%.3f s", s);
  if (!first_miss.empty()) o.detail += ", first mismatch " + first_miss;
  return o;
}

// 2
Outcome RoundTrip() {
  const char* langs[] = {"hindi", "bengali", "tamil", "telugu", "kannada"};
  std::mt19937 rng(20260102);
  int failures = 0, total = 0;
  for (int i = 0; i < 10000; ++i) {
    const LanguageConfig& cfg = testing::Config(langs[i % 5]);
    const std::string w = testing::RandomWord(cfg, rng);
    std::string joined;
    try {
      for (const auto& a : Syllabify(w, cfg)) joined += a.text;
    } catch (const Error&) {
      joined.clear();
    }
    ++total;
    failures += joined != w;
  }
  return {failures == 0, std::to_string(total) + " words, " +
                             std::to_string(failures) + " failures"};
}

// 3
Outcome SelectionBound() {
  const auto t0 = Clock::now();
  std::mt19937 rng(3);
  int cases = 0, violations = 0;
  double worst = 1.0;
  for (int pool_no = 0; pool_no < 200; ++pool_no) {
    const int n = 1 + rng() % 12;
    const int alphabet = 4 + rng() % 20;
    std::vector<SentenceRecord> pool;
    std::vector<std::set<std::string>> sets;
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> syl;
      const int len = 1 + rng() % 6;
      for (int k = 0; k < len; ++k) syl.push_back("s" + std::to_string(rng() % alphabet));
      char id[8];
      std::snprintf(id, sizeof(id), "p%02d", i);
      pool.push_back(testing::FakeRecord(id, syl, {"a"}));
      sets.emplace_back(syl.begin(), syl.end());
    }
    // Brute force: best coverage for every subset size.
    std::vector<std::size_t> best(n + 1, 0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::set<std::string> u;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) u.insert(sets[i].begin(), sets[i].end());
      }
      const int k = std::popcount(mask);
      best[k] = std::max(best[k], u.size());
    }
    for (int k = 1; k <= n; ++k) {
      best[k] = std::max(best[k], best[k - 1]);
      const auto sel = GreedySelect(pool, Budget{k});
      const double g = static_cast<double>(sel.covered_syllables.size());
      ++cases;
      const double ratio = g / static_cast<double>(best[k]);
      worst = std::min(worst, ratio);
      if (g < (1.0 - 1.0 / std::numbers::e) * best[k]) ++violations;
    }
  }
  const double s = Seconds(t0);
  return {violations == 0 && s < 60.0,
          std::to_string(cases) + " (pool, budget) cases over 200 pools, " +
              std::to_string(violations) + " below bound, worst ratio " +
              Fmt("%.3f", worst) + ", " + Fmt("%.2f s", s)};
}

// 4
Outcome WeakPhonePostcondition() {
  std::mt19937 rng(4);
  int violations = 0, checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n_phones = 6 + rng() % 10;
    std::vector<SentenceRecord> pool;
    const int n = 80 + rng() % 200;
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> ph;
      for (int p = 0; p < n_phones; ++p) {
        // Phone p shows up with probability falling in p.
        if (static_cast<int>(rng() % 1000) < 700 / (p + 1)) {
          ph.push_back("ph" + std::to_string(p));
        }
      }
      if (ph.empty()) ph.push_back("ph0");
      std::vector<std::string> syl = {"s" + std::to_string(rng() % 60),
                                      "s" + std::to_string(rng() % 60)};
      pool.push_back(testing::FakeRecord("r" + std::to_string(i), syl, ph));
    }
    const AugmentationPolicy policy{static_cast<int>(2 + rng() % 5), 50};
    const auto sel = GreedySelect(pool, TargetCoverage{1.0});
    const CorpusStats sel_stats = StatsOf(pool, sel.selected_ids);
    std::set<std::string> inventory;
    for (const auto& r : pool) inventory.insert(r.phones.begin(), r.phones.end());
    const auto weak = WeakPhones(sel_stats, policy.weak_k, inventory);
    const auto out = AugmentWeak(sel, pool, sel_stats, policy);
    const CorpusStats final_stats = StatsOf(pool, out.selected_ids);
    for (const auto& w : weak) {
      std::int64_t available = 0;
      for (const auto& r : pool) {
        available += std::count(r.phones.begin(), r.phones.end(), w.phone) > 0;
      }
      const auto it = final_stats.postings.find(w.phone);
      const std::int64_t have =
          it == final_stats.postings.end() ? 0 : it->second.size();
      ++checked;
      if (have < std::min<std::int64_t>(policy.target_sentences_per_weak_phone,
                                        available)) {
        ++violations;
      }
    }
  }
  return {violations == 0, std::to_string(checked) +
                               " weak phones over 100 pools, " +
                               std::to_string(violations) + " violations"};
}

// 5
Outcome ZipfRecovery() {
  bool ok = true;
  std::string detail;
  for (double s : {0.8, 1.0, 1.3}) {
    std::vector<std::int64_t> counts;
    for (int r = 1; r <= 300; ++r) {
      counts.push_back(std::llround(1e6 * std::pow(r, -s)));
    }
    const ZipfFit fit = FitZipf(counts);
    const double rel = std::fabs(fit.exponent - s) / s;
    ok = ok && rel <= 0.02 && fit.r_squared >= 0.999;
    detail += (detail.empty() ? "" : "; ") + Fmt("s=%.1f", s) +
              Fmt(" fit %.4f", fit.exponent) + Fmt(" r2 %.6f", fit.r_squared);
  }
  return {ok, detail};
}

// 6
Outcome SyllableRateCheck() {
  const auto a = AnalyzeSentence("r", "नमस्ते भारत एक सुंदर देश है",
                                 testing::Hindi());
  const int syllables = std::get<SentenceRecord>(a).syllable_count;
  const int rate = 48000;
  const AudioBuffer buf = Buffer(
      Concat({Silence(0.5, rate), Voiced(2.0, rate), Silence(0.5, rate)}),
      rate);
  const QcReport r = RunQc("r", syllables, buf, QcOptions{});
  bool ok = syllables == 14 && std::fabs(r.syllable_rate - 7.0) <= 0.1 &&
            r.verdict == Verdict::kPass;

  const QcThresholds t;
  auto verdict_at = [&](double v) {
    QcReport q;
    q.format_ok = true;
    q.syllable_rate = v;
    DeriveVerdict(&q, t, true);
    return q.verdict;
  };
  const bool flips = verdict_at(5.99) == Verdict::kWarn &&
                     verdict_at(6.0) == Verdict::kPass &&
                     verdict_at(8.0) == Verdict::kPass &&
                     verdict_at(8.01) == Verdict::kWarn;
  std::vector<QcReport> reps(3, r);
  reps[1].syllable_rate = 6.0;
  reps[2].syllable_rate = 8.0;
  const RateSummary s = DatasetRateSummary(reps, t);
  const std::string rendered = FormatMeanStd(s.mean, s.std);
  const bool table_form =
      rendered.find("±") != std::string::npos && rendered.size() >= 9;
  ok = ok && flips && table_form;
  return {ok, std::to_string(syllables) + " syllables, " +
                  Fmt("%.3f syl/s", r.syllable_rate) + ", verdict " +
                  std::string(VerdictName(r.verdict)) + ", boundaries " +
                  (flips ? "ok" : "wrong") + ", summary " + rendered};
}

// 7
Outcome McdAnalytic() {
  const int rate = 16000;
  const auto x = Concat({Silence(0.2, rate), Voiced(0.8, rate, 120),
                         Silence(0.2, rate)});
  const auto y = Concat({Silence(0.3, rate), Voiced(0.7, rate, 150, 0.25),
                         Silence(0.1, rate)});
  const double self = MelCepstralDistortion(Buffer(x, rate), Buffer(x, rate));

  Eigen::MatrixXd ref = Eigen::MatrixXd::Random(30, 25);
  Eigen::MatrixXd syn = ref;
  syn.col(7).array() += 1.0;
  const double unit = MelCepstralDistortion(DtwAlign(ref, syn));
  const double unit_want = 10.0 / std::numbers::ln10 * std::numbers::sqrt2;

  const double base = MelCepstralDistortion(Buffer(x, rate), Buffer(y, rate));
  double worst = 0.0;
  for (double db : {6.0, -6.0}) {
    const float g = static_cast<float>(std::pow(10.0, db / 20.0));
    auto gx = x, gy = y;
    for (auto& v : gx) v *= g;
    for (auto& v : gy) v *= g;
    worst = std::max(worst, std::fabs(MelCepstralDistortion(
                                          Buffer(gx, rate), Buffer(gy, rate)) -
                                      base));
  }
  const bool ok =
      self == 0.0 && std::fabs(unit - unit_want) <= 1e-6 && worst <= 1e-4;
  return {ok, Fmt("mcd(x,x)=%g", self) + Fmt(", unit offset %.9f", unit) +
                  Fmt(" (want %.9f)", unit_want) +
                  Fmt(", +/-6 dB drift %.2e dB", worst)};
}

// 8
double Exhaustive(const Eigen::MatrixXd& local, int i, int j, double acc) {
  // acc already includes local(i, j); paths summed front to back like the DP.
  const int tr = static_cast<int>(local.rows());
  const int ts = static_cast<int>(local.cols());
  if (i == tr - 1 && j == ts - 1) return acc;
  double best = std::numeric_limits<double>::infinity();
  if (i + 1 < tr && j + 1 < ts) {
    best = std::min(best, Exhaustive(local, i + 1, j + 1, acc + local(i + 1, j + 1)));
  }
  if (i + 1 < tr) best = std::min(best, Exhaustive(local, i + 1, j, acc + local(i + 1, j)));
  if (j + 1 < ts) best = std::min(best, Exhaustive(local, i, j + 1, acc + local(i, j + 1)));
  return best;
}

Outcome DtwOracle() {
  std::mt19937 rng(8);
  std::normal_distribution<double> nd(0, 1);
  int mismatches = 0;
  for (int t = 0; t < 500; ++t) {
    const int tr = 1 + rng() % 8, ts = 1 + rng() % 8;
    Eigen::MatrixXd ref(tr, 5), syn(ts, 5);
    for (Eigen::Index i = 0; i < ref.size(); ++i) ref.data()[i] = nd(rng);
    for (Eigen::Index i = 0; i < syn.size(); ++i) syn.data()[i] = nd(rng);
    Eigen::MatrixXd local(tr, ts);
    for (int i = 0; i < tr; ++i) {
      for (int j = 0; j < ts; ++j) {
        local(i, j) = CepstralDistance(ref.row(i), syn.row(j));
      }
    }
    const double want = Exhaustive(local, 0, 0, 0.0 + local(0, 0));
    const double got = DtwAlign(ref, syn).total_cost;
    const double got_serial = DtwAlignSerial(ref, syn).total_cost;
    mismatches += !(got == want && got_serial == want);
  }
  return {mismatches == 0,
          "500 pairs, " + std::to_string(mismatches) + " mismatches"};
}

// 9
Outcome MosDmos() {
  const auto mos = MosAggregateAll(
      LoadRatingsCsv(SourcePath("tests/data/ratings_mos.csv")));
  const auto dmos = DmosAggregateAll(
      LoadRatingsCsv(SourcePath("tests/data/ratings_dmos.csv")));
  // Hand-computed: sysA {5,4,5,4}; sysB {3,2,4}; same: ratios 5, 5;
  // prefer: 20/3, 20/3, 5.
  auto cell = [](const MetricReport& r) { return FormatMeanStd(r.mean, r.std); };
  const bool ok = mos.size() == 2 && cell(mos[0]) == "4.50±0.50" &&
                  cell(mos[1]) == "3.00±0.82" && dmos.size() == 2 &&
                  dmos[0].system == "prefer" && cell(dmos[0]) == "6.11±0.79" &&
                  dmos[0].mean > 5.0 && dmos[1].system == "same" &&
                  cell(dmos[1]) == "5.00±0.00";
  std::string detail;
  for (const auto& r : mos) detail += r.system + " MOS " + cell(r) + "; ";
  for (const auto& r : dmos) detail += r.system + " DMOS " + cell(r) + "; ";
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

// 10
Outcome WavContract() {
  const std::string dir =
      (fs::temp_directory_path() / "ttscorpus_acceptance_wav").string();
  fs::create_directories(dir);
  const std::string path = dir + "/conforming.wav";
  WriteWav(path, Buffer(Concat({Silence(0.2, 48000), Voiced(1.0, 48000)}), 48000));
  std::ifstream in(path, std::ios::binary);
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  const AudioBuffer back = ParseWav(bytes);
  const bool identical = EncodeWav(back) == bytes &&
                         back.spec == AudioSpec{48000, 16, 1};

  QcOptions strict;
  const QcReport r = RunQcJob(
      {"utt04", SourcePath("data/toy/wav/utt04.wav"), 14, ""}, strict);
  const bool rejected = r.spec.sample_rate == 44100 && !r.format_ok &&
                        r.verdict == Verdict::kFail;
  fs::remove_all(dir);
  return {identical && rejected,
          std::string("48k/16/mono round trip ") +
              (identical ? "bit-identical" : "differs") + ", 44.1 kHz strict " +
              std::string(VerdictName(r.verdict))};
}

// 11
int Cli(const std::string& args) {
  const std::string cmd = std::string("'") + TTSC_CLI_PATH + "' " + args +
                          " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string ReadAll(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool GoldenRun(const std::string& out, int jobs) {
  const std::string toy = SourcePath("data/toy/");
  const std::string base = "--config '" + SourcePath("data/configs/hindi.cfg") +
                           "' --out-dir '" + out + "' --jobs " +
                           std::to_string(jobs) + " ";
  return Cli(base + "analyze '" + toy + "corpus.txt'") == 0 &&
         Cli(base + "stats '" + out + "/sentences.jsonl'") == 0 &&
         Cli(base + "select '" + out + "/sentences.jsonl'") == 0 &&
         Cli(base + "curate '" + out + "/script.tsv' --lexicon '" + toy +
             "lexicon.tsv' --keywords '" + toy + "keywords.txt' --word-freq-corpus '" +
             toy + "corpus.txt'") == 0 &&
         Cli(base + "qc '" + toy + "manifest.tsv'") == 0 &&
         Cli(base + "mcd '" + toy + "pairs.tsv'") == 0 &&
         Cli(base + "mos '" + toy + "ratings.csv'") == 0 &&
         Cli(base + "dmos '" + toy + "ratings.csv'") == 0;
}

std::map<std::string, std::string> Snapshot(const std::string& dir) {
  std::map<std::string, std::string> m;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().filename() == "run_ledger.json") continue;
    m[e.path().filename().string()] = ReadAll(e.path());
  }
  return m;
}

Outcome GoldenToyRun() {
  const auto t0 = Clock::now();
  const fs::path root = fs::temp_directory_path() / "ttscorpus_acceptance_golden";
  fs::remove_all(root);
  const std::string a = (root / "run1_jobs1").string();
  const std::string b = (root / "run2_jobs1").string();
  const std::string c = (root / "run3_jobs4").string();
  const bool ran = GoldenRun(a, 1) && GoldenRun(b, 1) && GoldenRun(c, 4);
  const double s = Seconds(t0);
  if (!ran) return {false, "a pipeline stage exited nonzero"};
  const auto sa = Snapshot(a), sb = Snapshot(b), sc = Snapshot(c);
  const bool same = sa == sb && sa == sc;
  std::string diff;
  for (const auto& [name, bytes] : sa) {
    if (!sc.count(name) || sc.at(name) != bytes) diff += " " + name;
  }
  fs::remove_all(root);
  return {same && !sa.empty() && s < 30.0,
          std::to_string(sa.size()) + " output files identical across 2 runs "
              "and --jobs 1 vs 4: " + (same ? "yes" : "no" + diff) +
              Fmt(", %.2f s for 3 runs", s)};
}

}  // namespace
}  // namespace ttscorpus

int main() {
  using namespace ttscorpus;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"syllabifier oracle", SyllabifierOracle},
      {"syllabify round trip", RoundTrip},
      {"greedy selection bound", SelectionBound},
      {"weak-phone postcondition", WeakPhonePostcondition},
      {"Zipf recovery", ZipfRecovery},
      {"syllable-rate check", SyllableRateCheck},
      {"MCD analytic cases", McdAnalytic},
      {"DTW oracle", DtwOracle},
      {"MOS/DMOS aggregation", MosDmos},
      {"WAV contract", WavContract},
      {"end-to-end golden run", GoldenToyRun},
  };
  int failed = 0;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", n, c.name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
