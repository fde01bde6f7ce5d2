//
// Copyright 2026 The cswaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cswaug/corpus.h"

#include <fstream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "cswaug/error.h"
#include "cswaug/eval.h"
#include "cswaug/utf8.h"

namespace cswaug::corpus {
namespace {

bool InRange(char32_t c, char32_t lo, char32_t hi) { return c >= lo && c <= hi; }

bool IsWhitespace(char32_t c) {
  return InRange(c, 0x09, 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 ||
         c == 0x1680 || InRange(c, 0x2000, 0x200A) || c == 0x2028 ||
         c == 0x2029 || c == 0x202F || c == 0x205F || c == 0x3000;
}

// Removed under every policy.
bool IsFormatChar(char32_t c) {
  return c == 0x0640 /* tatweel */ || c == 0x061C || InRange(c, 0x200B, 0x200F) ||
         InRange(c, 0x202A, 0x202E) || InRange(c, 0x2066, 0x2069) ||
         c == 0xFEFF;
}

bool IsArabicDiacritic(char32_t c) {
  return InRange(c, 0x0610, 0x061A) || InRange(c, 0x064B, 0x065F) ||
         c == 0x0670 || InRange(c, 0x06D6, 0x06DC) ||
         InRange(c, 0x06DF, 0x06E4) || InRange(c, 0x06E7, 0x06E8) ||
         InRange(c, 0x06EA, 0x06ED) || InRange(c, 0x08D3, 0x08E1) ||
         InRange(c, 0x08E3, 0x08FF);
}

bool IsPunct(char32_t c) {
  if (c < 0x80) {
    return InRange(c, 0x21, 0x2F) || InRange(c, 0x3A, 0x40) ||
           InRange(c, 0x5B, 0x60) || InRange(c, 0x7B, 0x7E);
  }
  return c == 0xA1 || c == 0xA7 || c == 0xAB || c == 0xB6 || c == 0xB7 ||
         c == 0xBB || c == 0xBF || c == 0x060C || c == 0x060D ||
         c == 0x061B || c == 0x061E || c == 0x061F ||
         InRange(c, 0x066A, 0x066D) || c == 0x06D4 ||
         InRange(c, 0x2010, 0x2027) || InRange(c, 0x2030, 0x205E) ||
         InRange(c, 0x3001, 0x3003) || InRange(c, 0x3008, 0x3011) ||
         c == 0xFD3E || c == 0xFD3F || InRange(c, 0xFE10, 0xFE19) ||
         InRange(c, 0xFE30, 0xFE4F) || InRange(c, 0xFF01, 0xFF0F) ||
         InRange(c, 0xFF1A, 0xFF20) || InRange(c, 0xFF3B, 0xFF40) ||
         InRange(c, 0xFF5B, 0xFF65);
}

bool IsArabicLetter(char32_t c) {
  return InRange(c, 0x0620, 0x063F) || InRange(c, 0x0641, 0x064A) ||
         InRange(c, 0x066E, 0x066F) || InRange(c, 0x0671, 0x06D3) ||
         c == 0x06D5 || InRange(c, 0x06EE, 0x06EF) ||
         InRange(c, 0x06FA, 0x06FC) || c == 0x06FF ||
         InRange(c, 0x0750, 0x077F) || InRange(c, 0x08A0, 0x08C9) ||
         InRange(c, 0xFB50, 0xFBB1) || InRange(c, 0xFBD3, 0xFD3D) ||
         InRange(c, 0xFD50, 0xFDC7) || InRange(c, 0xFDF0, 0xFDFB) ||
         InRange(c, 0xFE70, 0xFEFC);
}

bool IsLatinLetter(char32_t c) {
  return InRange(c, 'A', 'Z') || InRange(c, 'a', 'z') ||
         InRange(c, 0xC0, 0xD6) || InRange(c, 0xD8, 0xF6) ||
         InRange(c, 0xF8, 0x024F) || InRange(c, 0x1E00, 0x1EFF);
}

char32_t MapAlifYa(char32_t c) {
  switch (c) {
    case 0x0622:  // آ
    case 0x0623:  // أ
    case 0x0625:  // إ
    case 0x0671:  // ٱ
      return 0x0627;
    case 0x0649:  // ى
      return 0x064A;
    default:
      return c;
  }
}

char32_t ToLowerLatin(char32_t c) {
  if (InRange(c, 'A', 'Z')) return c + 32;
  if (InRange(c, 0xC0, 0xDE) && c != 0xD7) return c + 32;
  return c;
}

std::vector<std::u32string> SplitWhitespace(std::u32string_view text) {
  std::vector<std::u32string> out;
  std::u32string cur;
  for (char32_t c : text) {
    if (IsWhitespace(c)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

std::string Normalize(std::string_view text, const NormalizationPolicy& policy) {
  const std::u32string cps = utf8::Decode(text);
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char32_t c : cps) {
    if (IsFormatChar(c)) continue;
    if (IsWhitespace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (policy.strip_diacritics && IsArabicDiacritic(c)) continue;
    if (policy.strip_punct && IsPunct(c)) continue;
    if (policy.alif_ya) c = MapAlifYa(c);
    if (policy.lowercase_latin) c = ToLowerLatin(c);
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    utf8::Append(c, out);
  }
  return out;
}

Lang TagTokenLanguage(std::string_view token) {
  bool latin = false;
  for (char32_t c : utf8::Decode(token)) {
    if (IsArabicLetter(c)) return Lang::kMatrix;
    latin = latin || IsLatinLetter(c);
  }
  return latin ? Lang::kEmbedded : Lang::kOther;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  for (const std::u32string& piece : SplitWhitespace(utf8::Decode(text))) {
    std::string surface = utf8::Encode(piece);
    const Lang lang = TagTokenLanguage(surface);
    tokens.push_back(Token{std::move(surface), lang});
  }
  if (tokens.empty()) throw Error(ErrorCode::kEmptySentence, "no tokens");
  return tokens;
}

std::vector<Token> NormalizeAndTokenize(std::string_view text,
                                        const NormalizationPolicy& policy) {
  return Tokenize(Normalize(text, policy));
}

const SentencePair* ParallelCorpus::Find(std::string_view id) const {
  for (const SentencePair& p : pairs) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

std::vector<std::string> ReadLines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failed: " + path.string());
  return lines;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::string Where(const std::filesystem::path& path, std::size_t line_index) {
  return path.string() + ":" + std::to_string(line_index + 1);
}

namespace {

// Adds one pair or records why it was skipped.
void AddPair(ParallelCorpus& corpus, std::string id, std::size_t row,
             std::string_view src, std::string_view tgt,
             const NormalizationPolicy& policy) {
  std::vector<Token> source;
  std::vector<Token> target;
  try {
    source = NormalizeAndTokenize(src, policy);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptySentence) throw;
    corpus.skipped.push_back({std::move(id), "EmptySentence: source"});
    return;
  }
  try {
    target = NormalizeAndTokenize(tgt, policy);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptySentence) throw;
    corpus.skipped.push_back({std::move(id), "EmptySentence: target"});
    return;
  }
  corpus.pairs.push_back({std::move(id), std::move(source), std::move(target)});
  corpus.rows.push_back(row);
}

}  // namespace

ParallelCorpus LoadParallel(const std::filesystem::path& src_path,
                            const std::filesystem::path& tgt_path,
                            const NormalizationPolicy& policy) {
  const std::vector<std::string> src = ReadLines(src_path);
  const std::vector<std::string> tgt = ReadLines(tgt_path);
  if (src.size() != tgt.size()) {
    throw Error(ErrorCode::kLineCountMismatch,
                src_path.string() + " has " + std::to_string(src.size()) +
                    " lines, " + tgt_path.string() + " has " +
                    std::to_string(tgt.size()));
  }
  ParallelCorpus corpus;
  corpus.total_rows = src.size();
  for (std::size_t i = 0; i < src.size(); ++i) {
    AddPair(corpus, std::to_string(i), i, src[i], tgt[i], policy);
  }
  return corpus;
}

ParallelCorpus LoadParallelTsv(const std::filesystem::path& path,
                               const NormalizationPolicy& policy) {
  const std::vector<std::string> lines = ReadLines(path);
  ParallelCorpus corpus;
  corpus.total_rows = lines.size();
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto cols = SplitTabs(lines[i]);
    if (cols.size() != 3) {
      throw Error(ErrorCode::kParseError,
                  Where(path, i) + ": expected 3 tab-separated columns, got " +
                      std::to_string(cols.size()));
    }
    std::string id(cols[0]);
    if (id.empty()) {
      throw Error(ErrorCode::kParseError, Where(path, i) + ": empty id");
    }
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::kDuplicateId, Where(path, i) + ": id " + id);
    }
    AddPair(corpus, std::move(id), i, cols[1], cols[2], policy);
  }
  return corpus;
}

void WriteParallelTsv(const ParallelCorpus& corpus, std::ostream& out) {
  for (const SentencePair& p : corpus.pairs) {
    out << p.id << '\t' << JoinSurfaces(p.source) << '\t'
        << JoinSurfaces(p.target) << '\n';
  }
}

void WriteSkipReport(std::span<const SkipRecord> records, std::ostream& out) {
  for (const SkipRecord& r : records) out << r.id << '\t' << r.reason << '\n';
}

void WriteGenerations(std::span<const Generation> generations,
                      std::ostream& out) {
  for (const Generation& g : generations) {
    out << g.id << '\t' << StrategyName(g.strategy) << '\t' << g.Text() << '\n';
  }
}

GenerationSet ReadGenerations(const std::filesystem::path& path) {
  const std::vector<std::string> lines = ReadLines(path);
  GenerationSet out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty() || lines[i][0] == '#') continue;
    const auto cols = SplitTabs(lines[i]);
    if (cols.size() != 3) {
      throw Error(ErrorCode::kParseError,
                  Where(path, i) + ": expected id, strategy, text");
    }
    const auto strategy = ParseStrategy(cols[1]);
    if (!strategy) {
      throw Error(ErrorCode::kParseError,
                  Where(path, i) + ": unknown strategy " + std::string(cols[1]));
    }
    Generation g;
    g.id = std::string(cols[0]);
    g.strategy = *strategy;
    try {
      g.tokens = Tokenize(cols[2]);
    } catch (const Error&) {
      throw Error(ErrorCode::kParseError, Where(path, i) + ": empty text");
    }
    g.spf = eval::Spf(g.tokens);
    out.push_back(std::move(g));
  }
  return out;
}

GenerationSet IntersectGenerations(std::span<const GenerationSet> sets,
                                   std::size_t designated) {
  if (sets.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no generation sets to intersect");
  }
  if (designated >= sets.size()) {
    throw Error(ErrorCode::kInvalidArgument, "designated set out of range");
  }
  std::unordered_map<std::string, std::size_t> hits;
  for (const GenerationSet& set : sets) {
    std::unordered_set<std::string_view> ids;
    for (const Generation& g : set) {
      if (!ids.insert(g.id).second) {
        throw Error(ErrorCode::kInvalidArgument,
                    "duplicate id in generation set: " + g.id);
      }
      ++hits[g.id];
    }
  }
  GenerationSet out;
  for (const Generation& g : sets[designated]) {
    if (hits[g.id] == sets.size()) out.push_back(g);
  }
  return out;
}

}  // namespace cswaug::corpus
