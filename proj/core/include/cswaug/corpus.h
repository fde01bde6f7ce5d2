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

#ifndef CSWAUG_CORPUS_H_
#define CSWAUG_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cswaug/types.h"

namespace cswaug::corpus {

// Text normalization switches. Every combination is idempotent.
struct NormalizationPolicy {
  bool alif_ya = true;           // {أ إ آ ٱ} -> ا, ى -> ي
  bool strip_punct = true;
  bool lowercase_latin = true;
  bool strip_diacritics = true;  // harakat, tanwin, shadda, sukun, dagger alif

  friend bool operator==(const NormalizationPolicy&,
                         const NormalizationPolicy&) = default;
};

// Tatweel, zero-width and bidi control characters are always removed;
// whitespace runs collapse to one ASCII space and the result is trimmed.
std::string Normalize(std::string_view text,
                      const NormalizationPolicy& policy = {});

// Matrix if the token has an Arabic-block letter, Embedded if it has a Latin
// letter and no Arabic one, Other otherwise. Mixed-script tokens are Matrix.
Lang TagTokenLanguage(std::string_view token);

// Splits already-normalized text on whitespace and tags every token.
// Throws Error(kEmptySentence) when no token remains.
std::vector<Token> Tokenize(std::string_view text);

std::vector<Token> NormalizeAndTokenize(std::string_view text,
                                        const NormalizationPolicy& policy);

struct SkipRecord {
  std::string id;
  std::string reason;
};

struct ParallelCorpus {
  std::vector<SentencePair> pairs;
  // Zero-based input row of each pair; alignment and tag files are indexed by
  // input row, not by surviving pair.
  std::vector<std::size_t> rows;
  std::size_t total_rows = 0;
  std::vector<SkipRecord> skipped;

  const SentencePair* Find(std::string_view id) const;
};

// Pair i comes from line i of each file and gets id "i". Lines that
// normalize to nothing are skipped and reported in `skipped`.
ParallelCorpus LoadParallel(const std::filesystem::path& src_path,
                            const std::filesystem::path& tgt_path,
                            const NormalizationPolicy& policy = {});

// Three-column TSV: id, source, target.
ParallelCorpus LoadParallelTsv(const std::filesystem::path& path,
                               const NormalizationPolicy& policy = {});
void WriteParallelTsv(const ParallelCorpus& corpus, std::ostream& out);

void WriteSkipReport(std::span<const SkipRecord> records, std::ostream& out);

using GenerationSet = std::vector<Generation>;

// Generation files: "id<TAB>strategy<TAB>text", '#' lines are headers.
void WriteGenerations(std::span<const Generation> generations,
                      std::ostream& out);
GenerationSet ReadGenerations(const std::filesystem::path& path);

// Keeps the entries of sets[designated] whose id occurs in every set, in
// their original order. Throws kInvalidArgument for an empty list, an
// out-of-range designated index, or duplicate ids inside one set.
GenerationSet IntersectGenerations(std::span<const GenerationSet> sets,
                                   std::size_t designated = 0);

// Helpers shared by the file readers of other modules.
std::vector<std::string> ReadLines(const std::filesystem::path& path);
std::vector<std::string_view> SplitTabs(std::string_view line);
std::string Where(const std::filesystem::path& path, std::size_t line_index);

}  // namespace cswaug::corpus

#endif  // CSWAUG_CORPUS_H_
