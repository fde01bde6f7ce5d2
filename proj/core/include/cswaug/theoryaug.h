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

#ifndef CSWAUG_THEORYAUG_H_
#define CSWAUG_THEORYAUG_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "cswaug/align.h"
#include "cswaug/corpus.h"
#include "cswaug/rng.h"
#include "cswaug/types.h"

namespace cswaug::theory {

struct TheoryConfig {
  double ref_spf = 0.22;
  std::size_t max_candidates = 64;
  // Normalized matrix-language function words; they never switch under MLF.
  std::unordered_set<std::string> function_words;

  void Validate() const;
};

std::unordered_set<std::string> LoadFunctionWords(
    const std::filesystem::path& path, const corpus::NormalizationPolicy& policy = {});

struct Segment {
  align::Span range;
  Lang lang = Lang::kMatrix;  // kMatrix or kEmbedded
};

// Ordered segments partitioning [0, src_len); adjacent segments alternate.
using SegmentPlan = std::vector<Segment>;

// Matrix segments emit their source tokens, Embedded segments the target
// tokens of their replaceable span. Throws kInvalidArgument if an Embedded
// segment has no replaceable span.
std::vector<Token> RenderPlan(const SentencePair& pair,
                              const align::AlignmentSet& alignment,
                              const SegmentPlan& plan);

// Equivalence Constraint candidates: every switch boundary is crossed by no
// alignment link and every Embedded segment has a replaceable span. The
// monolingual plans are excluded. Plans are enumerated by increasing number
// of switch boundaries, depth-first left to right within a count, and
// truncated at cfg.max_candidates. Throws kNoCandidate.
std::vector<Generation> EcGenerations(const SentencePair& pair,
                                      const align::AlignmentSet& alignment,
                                      const TheoryConfig& cfg);

// Matrix Language Frame candidates: function words and Other tokens stay in
// the matrix frame; runs of Matrix content words may become embedded islands
// rendered from their replaceable spans. At least one island. Same ordering
// and truncation as EcGenerations. Throws kNoCandidate.
std::vector<Generation> MlfGenerations(const SentencePair& pair,
                                       const align::AlignmentSet& alignment,
                                       const TheoryConfig& cfg);

// Uniform draw. Throws kEmptyCandidates.
const Generation& SampleRandom(std::span<const Generation> candidates, Rng& rng);

// Candidate with spf nearest to ref_spf; ties go to fewer switch points,
// then to the earlier candidate. Throws kEmptyCandidates.
const Generation& SampleSpf(std::span<const Generation> candidates,
                            double ref_spf);

}  // namespace cswaug::theory

#endif  // CSWAUG_THEORYAUG_H_
