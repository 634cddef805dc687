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

#include "ttscorpus/curation.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ttscorpus/error.h"
#include "ttscorpus/script.h"

namespace ttscorpus {

namespace {

constexpr Codepoint kDanda = 0x0964;
constexpr Codepoint kDoubleDanda = 0x0965;

bool IsKeptPunctuation(Codepoint cp) {
  return cp == ',' || cp == '.' || cp == kDanda || cp == kDoubleDanda;
}

bool IsEdgePunctuation(Codepoint cp) {
  return IsPunctuation(cp) || cp == kDanda || cp == kDoubleDanda;
}

struct Edit {
  std::size_t begin;
  std::size_t end;
  std::string replacement;
};

struct Fragment {
  std::vector<Violation> violations;
  std::vector<Edit> edits;
};

// Applies non-overlapping edits (earlier entries win) and collapses
// whitespace runs to single spaces.
std::string ApplyEdits(std::string_view text, std::vector<Edit> edits) {
  std::vector<Edit> chosen;
  for (auto& e : edits) {
    const bool overlaps = std::any_of(
        chosen.begin(), chosen.end(),
        [&](const Edit& c) { return e.begin < c.end && c.begin < e.end; });
    if (!overlaps) chosen.push_back(std::move(e));
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const Edit& a, const Edit& b) { return a.begin < b.begin; });
  std::string applied;
  std::size_t pos = 0;
  for (const auto& e : chosen) {
    applied.append(text.substr(pos, e.begin - pos));
    applied += e.replacement;
    pos = e.end;
  }
  applied.append(text.substr(pos));

  std::string out;
  bool pending_space = false;
  for (const auto& d : DecodeUtf8(applied)) {
    if (IsUnicodeSpace(d.cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.append(applied, d.begin, d.end - d.begin);
  }
  return out;
}

Fragment PunctuationFragment(std::string_view text) {
  Fragment f;
  const auto chars = DecodeUtf8(text);
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const Codepoint cp = chars[i].cp;
    if (!IsPunctuation(cp) || IsKeptPunctuation(cp)) continue;
    const bool joins = i > 0 && i + 1 < chars.size() &&
                       !IsUnicodeSpace(chars[i - 1].cp) &&
                       !IsUnicodeSpace(chars[i + 1].cp);
    std::string mark(text.substr(chars[i].begin, chars[i].end - chars[i].begin));
    f.violations.push_back({"punctuation", chars[i].begin, chars[i].end,
                            Severity::kFixApplied, "removed '" + mark + "'"});
    f.edits.push_back({chars[i].begin, chars[i].end, joins ? " " : ""});
  }
  return f;
}

Fragment WhitespaceFragment(std::string_view text) {
  Fragment f;
  const auto chars = DecodeUtf8(text);
  std::size_t i = 0;
  while (i < chars.size()) {
    if (!IsUnicodeSpace(chars[i].cp)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < chars.size() && IsUnicodeSpace(chars[j].cp)) ++j;
    const bool edge = i == 0 || j == chars.size();
    const bool irregular = j - i > 1 || chars[i].cp != ' ';
    if (edge || irregular) {
      f.violations.push_back({"whitespace", chars[i].begin,
                              chars[j - 1].end, Severity::kFixApplied,
                              "irregular whitespace"});
    }
    i = j;
  }
  return f;
}

struct Chunk {
  std::string_view text;
  std::size_t begin;
};

std::vector<Chunk> SplitChunks(std::string_view text) {
  std::vector<Chunk> out;
  const auto chars = DecodeUtf8(text);
  std::size_t i = 0;
  while (i < chars.size()) {
    if (IsUnicodeSpace(chars[i].cp)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < chars.size() && !IsUnicodeSpace(chars[j].cp)) ++j;
    out.push_back({text.substr(chars[i].begin, chars[j - 1].end - chars[i].begin),
                   chars[i].begin});
    i = j;
  }
  return out;
}

std::string AsciiLower(std::string s) {
  for (auto& ch : s) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return s;
}

bool IsAbbreviation(std::string_view chunk) {
  while (!chunk.empty() && chunk.back() == ',') chunk.remove_suffix(1);
  if (chunk.size() < 2 || chunk.back() != '.') return false;
  const auto cps = ToCodepoints(chunk);
  // Latin title-style abbreviation: "Dr.", "Mr.", "U."
  if (cps.size() <= 4 && cps.front() >= 'A' && cps.front() <= 'Z' &&
      std::all_of(cps.begin(), cps.end() - 1, IsAsciiLetter)) {
    return true;
  }
  // Two or more short period-terminated segments: "U.S.", "ए.बी."
  int segments = 0;
  std::size_t seg_len = 0;
  for (Codepoint cp : cps) {
    if (cp == '.') {
      if (seg_len == 0 || seg_len > 3) return false;
      ++segments;
      seg_len = 0;
    } else {
      ++seg_len;
    }
  }
  return segments >= 2 && seg_len == 0;
}

bool IsAcronym(std::string_view core) {
  int upper_run = 0, best = 0;
  for (char ch : core) {
    if (ch >= 'a' && ch <= 'z') return false;
    upper_run = (ch >= 'A' && ch <= 'Z') ? upper_run + 1 : 0;
    best = std::max(best, upper_run);
  }
  return best >= 2;
}

// Pieces of a chunk between punctuation marks that the punctuation pass
// removes. Matching on pieces keeps a second curation pass from seeing a
// lexicon token the first pass hid behind such a mark.
std::vector<Chunk> SplitAtRemovable(const Chunk& chunk) {
  std::vector<Chunk> pieces;
  std::size_t start = 0;
  for (const auto& d : DecodeUtf8(chunk.text)) {
    if (!IsPunctuation(d.cp) || IsKeptPunctuation(d.cp)) continue;
    if (d.begin > start) {
      pieces.push_back({chunk.text.substr(start, d.begin - start),
                        chunk.begin + start});
    }
    start = d.end;
  }
  if (start < chunk.text.size()) {
    pieces.push_back({chunk.text.substr(start), chunk.begin + start});
  }
  return pieces;
}

void FlagPiece(const Chunk& chunk, const LanguageConfig& cfg,
               const Lexicon& lexicon, Fragment* out) {
  Fragment& f = *out;
  // Lexicon: exact piece, then piece without trailing comma/full stop.
  std::string_view key = chunk.text;
  auto hit = lexicon.find(std::string(key));
  if (hit == lexicon.end()) {
    while (!key.empty() && (key.back() == ',' || key.back() == '.')) {
      key.remove_suffix(1);
    }
    if (!key.empty()) hit = lexicon.find(std::string(key));
  }
  if (hit != lexicon.end()) {
    f.violations.push_back({"lexicon", chunk.begin, chunk.begin + key.size(),
                            Severity::kFixApplied,
                            "expanded '" + hit->first + "' to '" +
                                hit->second + "'"});
    f.edits.push_back({chunk.begin, chunk.begin + key.size(), hit->second});
    return;
  }

  bool has_digit = false;
  for (const auto& d : DecodeUtf8(chunk.text)) {
    const std::size_t b = chunk.begin + d.begin;
    const std::size_t e = chunk.begin + d.end;
    if (IsAsciiDigit(d.cp) ||
        (cfg.digit_range && cfg.digit_range->Contains(d.cp))) {
      has_digit = true;
    } else if (IsSymbol(d.cp)) {
      f.violations.push_back({"symbol", b, e, Severity::kNeedsHuman,
                              std::string(chunk.text.substr(d.begin,
                                                            d.end - d.begin))});
    }
  }
  if (has_digit) {
    f.violations.push_back({"numeral", chunk.begin,
                            chunk.begin + chunk.text.size(),
                            Severity::kNeedsHuman, std::string(chunk.text)});
  }
  if (IsAbbreviation(chunk.text)) {
    f.violations.push_back({"abbreviation", chunk.begin,
                            chunk.begin + chunk.text.size(),
                            Severity::kNeedsHuman, std::string(chunk.text)});
  } else if (IsAcronym(chunk.text)) {
    f.violations.push_back({"acronym", chunk.begin,
                            chunk.begin + chunk.text.size(),
                            Severity::kNeedsHuman, std::string(chunk.text)});
  }
}

Fragment NonlexicalFragment(std::string_view text, const LanguageConfig& cfg,
                            const Lexicon& lexicon) {
  Fragment f;
  for (const auto& chunk : SplitChunks(text)) {
    for (const auto& piece : SplitAtRemovable(chunk)) FlagPiece(piece, cfg, lexicon, &f);
  }
  return f;
}

CurationVerdict ToVerdict(std::string_view text, Fragment f) {
  CurationVerdict v;
  v.normalized_text = ApplyEdits(text, std::move(f.edits));
  v.violations = std::move(f.violations);
  return v;
}

void SortViolations(std::vector<Violation>* v) {
  std::stable_sort(v->begin(), v->end(),
                   [](const Violation& a, const Violation& b) {
                     return a.begin < b.begin;
                   });
}

}  // namespace

std::string_view SeverityName(Severity s) {
  return s == Severity::kFixApplied ? "fix-applied" : "needs-human";
}

bool CurationVerdict::NeedsHuman() const {
  return std::any_of(violations.begin(), violations.end(), [](const auto& v) {
    return v.severity == Severity::kNeedsHuman;
  });
}

int CurationVerdict::CountFixes() const {
  return static_cast<int>(
      std::count_if(violations.begin(), violations.end(), [](const auto& v) {
        return v.severity == Severity::kFixApplied;
      }));
}

std::vector<WordSpan> SplitWords(std::string_view text) {
  std::vector<WordSpan> out;
  for (const auto& chunk : SplitChunks(text)) {
    const auto chars = DecodeUtf8(chunk.text);
    std::size_t b = 0, e = chars.size();
    while (b < e && IsEdgePunctuation(chars[b].cp)) ++b;
    while (e > b && IsEdgePunctuation(chars[e - 1].cp)) --e;
    if (b == e) continue;
    const std::size_t bb = chars[b].begin;
    const std::size_t eb = chars[e - 1].end;
    out.push_back({std::string(chunk.text.substr(bb, eb - bb)),
                   chunk.begin + bb, chunk.begin + eb});
  }
  return out;
}

CurationVerdict CheckPunctuation(std::string_view text) {
  return ToVerdict(text, PunctuationFragment(text));
}

CurationVerdict FlagNonlexical(std::string_view text, const LanguageConfig& cfg,
                               const Lexicon& lexicon) {
  return ToVerdict(text, NonlexicalFragment(text, cfg, lexicon));
}

CurationVerdict FlagSensitive(std::string_view text,
                              const std::vector<std::string>& keywords) {
  Fragment f;
  const auto words = SplitWords(text);
  std::vector<std::string> folded;
  for (const auto& w : words) folded.push_back(AsciiLower(w.core));
  for (const auto& kw : keywords) {
    std::vector<std::string> parts;
    std::istringstream in(AsciiLower(kw));
    for (std::string p; in >> p;) parts.push_back(p);
    if (parts.empty() || parts.size() > folded.size()) continue;
    for (std::size_t i = 0; i + parts.size() <= folded.size(); ++i) {
      if (std::equal(parts.begin(), parts.end(), folded.begin() + i)) {
        f.violations.push_back({"sensitive", words[i].begin,
                                words[i + parts.size() - 1].end,
                                Severity::kNeedsHuman, kw});
      }
    }
  }
  SortViolations(&f.violations);
  return ToVerdict(text, std::move(f));
}

CurationVerdict FlagLongWords(std::string_view text, const LanguageConfig& cfg,
                              int max_syllables) {
  Fragment f;
  for (const auto& w : SplitWords(text)) {
    int syllables = 0;
    try {
      for (const auto& piece : Tokenize(w.core, cfg).words) {
        syllables += static_cast<int>(Syllabify(piece, cfg).size());
      }
    } catch (const Error&) {
      continue;  // unparsable words are reported by analysis
    }
    if (syllables > max_syllables) {
      f.violations.push_back({"long-word", w.begin, w.end,
                              Severity::kNeedsHuman,
                              w.core + " (" + std::to_string(syllables) +
                                  " syllables)"});
    }
  }
  return ToVerdict(text, std::move(f));
}

CurationVerdict FlagUncommonWords(
    std::string_view text,
    const std::map<std::string, std::int64_t>& word_freq,
    std::int64_t min_count) {
  Fragment f;
  if (!word_freq.empty()) {
    for (const auto& w : SplitWords(text)) {
      auto it = word_freq.find(w.core);
      const std::int64_t n = it == word_freq.end() ? 0 : it->second;
      if (n < min_count) {
        f.violations.push_back({"uncommon-word", w.begin, w.end,
                                Severity::kNeedsHuman,
                                w.core + " (count " + std::to_string(n) + ")"});
      }
    }
  }
  return ToVerdict(text, std::move(f));
}

CurationVerdict FlagRepeatedPhrases(std::string_view text) {
  Fragment f;
  const auto words = SplitWords(text);
  std::vector<std::string> folded;
  for (const auto& w : words) folded.push_back(AsciiLower(w.core));
  std::size_t i = 0;
  while (i < folded.size()) {
    std::size_t matched = 0;
    for (std::size_t n = 3; n >= 1; --n) {
      if (i + 2 * n > folded.size()) continue;
      if (std::equal(folded.begin() + i, folded.begin() + i + n,
                     folded.begin() + i + n)) {
        matched = n;
        break;
      }
    }
    if (matched == 0) {
      ++i;
      continue;
    }
    std::string phrase;
    for (std::size_t k = i; k < i + matched; ++k) {
      if (!phrase.empty()) phrase += ' ';
      phrase += words[k].core;
    }
    f.violations.push_back({"repeated-phrase", words[i].begin,
                            words[i + 2 * matched - 1].end,
                            Severity::kNeedsHuman, phrase});
    i += 2 * matched;
  }
  return ToVerdict(text, std::move(f));
}

CurationVerdict Curate(const std::string& id, std::string_view text,
                       const LanguageConfig& cfg,
                       const CurationResources& res) {
  Fragment lex = NonlexicalFragment(text, cfg, res.lexicon);
  Fragment punct = PunctuationFragment(text);
  Fragment space = WhitespaceFragment(text);

  // Lexicon edits win over punctuation edits inside the same span.
  std::vector<Edit> edits = lex.edits;
  std::vector<Violation> all = lex.violations;
  for (std::size_t i = 0; i < punct.edits.size(); ++i) {
    const auto& e = punct.edits[i];
    const bool shadowed =
        std::any_of(lex.edits.begin(), lex.edits.end(), [&](const Edit& l) {
          return e.begin < l.end && l.begin < e.end;
        });
    if (shadowed) continue;
    edits.push_back(e);
    all.push_back(punct.violations[i]);
  }
  all.insert(all.end(), space.violations.begin(), space.violations.end());
  for (const auto& v : {FlagSensitive(text, res.keywords),
                   FlagLongWords(text, cfg, res.max_syllables_per_word),
                   FlagUncommonWords(text, res.word_freq, res.min_word_count),
                   FlagRepeatedPhrases(text)}) {
    all.insert(all.end(), v.violations.begin(), v.violations.end());
  }
  SortViolations(&all);

  CurationVerdict verdict;
  verdict.sentence_id = id;
  verdict.violations = std::move(all);
  verdict.normalized_text = ApplyEdits(text, std::move(edits));
  return verdict;
}

Lexicon LoadLexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kConfigError, "cannot open lexicon " + path);
  Lexicon lex;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw Error(ErrorCode::kConfigError,
                  path + ":" + std::to_string(line_no) +
                      ": expected token<TAB>expansion");
    }
    lex[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return lex;
}

std::vector<std::string> LoadKeywords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kConfigError, "cannot open keywords " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace ttscorpus
