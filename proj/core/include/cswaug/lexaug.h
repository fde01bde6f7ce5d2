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

#ifndef CSWAUG_LEXAUG_H_
#define CSWAUG_LEXAUG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cswaug/align.h"
#include "cswaug/corpus.h"
#include "cswaug/rng.h"
#include "cswaug/types.h"

namespace cswaug::lexaug {

// Matrix surface -> embedded-language glosses. Each gloss is a token
// sequence (multi-word glosses expand in place when injected).
class GlossLexicon {
 public:
  // `surface` and `gloss` are normalized with `policy` before insertion;
  // glosses that normalize to nothing are ignored. Duplicate glosses of one
  // surface are kept once.
  void Add(std::string_view surface, std::string_view gloss,
           const corpus::NormalizationPolicy& policy = {});

  const std::vector<std::vector<Token>>* Find(const std::string& surface) const;
  std::size_t size() const { return entries_.size(); }

  // TSV "surface<TAB>gloss", repeated lines for multiple glosses.
  static GlossLexicon Load(const std::filesystem::path& path,
                           const corpus::NormalizationPolicy& policy = {});

 private:
  std::map<std::string, std::vector<std::vector<Token>>> entries_;
};

struct AugmentConfig {
  double rate_percent = 19.0;
  std::uint64_t seed = 0;
  std::size_t min_replacements = 1;

  // Throws kInvalidArgument unless rate_percent is in (0, 100].
  void Validate() const;
};

// k = max(min_replacements, round_half_up(n * rate / 100)).
std::size_t ReplacementCount(std::size_t matrix_tokens, const AugmentConfig& cfg);

// Per target token: 1 marks a plausible switch word.
struct SwitchTags {
  std::vector<std::uint8_t> flags;

  friend bool operator==(const SwitchTags&, const SwitchTags&) = default;
};

// Builds a Generation and fills its spf from the tokens.
Generation MakeGeneration(std::string id, std::vector<Token> tokens,
                          Strategy strategy,
                          std::vector<std::size_t> replaced_src_positions);

// Checks the Generation invariants against its source pair: spf consistent
// with the tokens, replaced positions sorted, unique and inside the source.
// Returns a description of the first violation.
std::optional<std::string> CheckGeneration(const Generation& g,
                                           const SentencePair& pair);

// Replaces k randomly chosen Matrix source tokens that have a lexicon entry
// with one of their glosses. Throws kNoEligiblePosition.
Generation DictReplace(const SentencePair& pair, const GlossLexicon& lexicon,
                       const AugmentConfig& cfg, Rng& rng);

// Replaces k randomly chosen aligned Matrix source tokens with the target
// tokens of their replaceable span. Throws kNoEligiblePosition.
Generation AlignedRandomReplace(const SentencePair& pair,
                                const align::AlignmentSet& alignment,
                                const AugmentConfig& cfg, Rng& rng);

struct PredictedReplacement {
  Generation generation;
  // Tagged target runs that are not the exact span of a contiguous source
  // range and were left untouched.
  std::vector<align::Span> skipped_runs;
};

// Injects every maximal run of tagged target tokens whose source cover is a
// contiguous range with exactly that replaceable span. Deterministic.
// Throws kTagLengthMismatch.
PredictedReplacement AlignedPredictedReplace(const SentencePair& pair,
                                             const align::AlignmentSet& alignment,
                                             const SwitchTags& tags);

// Tags translation tokens that match an Embedded token of the CSW sentence.
// Each CSW token is consumed at most once, greedily left to right.
SwitchTags MatchSwitchTags(std::span<const Token> csw,
                           std::span<const Token> translation);

}  // namespace cswaug::lexaug

#endif  // CSWAUG_LEXAUG_H_
