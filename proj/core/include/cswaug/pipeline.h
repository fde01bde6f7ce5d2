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

#ifndef CSWAUG_PIPELINE_H_
#define CSWAUG_PIPELINE_H_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "cswaug/align.h"
#include "cswaug/corpus.h"
#include "cswaug/lexaug.h"
#include "cswaug/theoryaug.h"
#include "cswaug/types.h"

namespace cswaug::pipeline {

struct AugmentOptions {
  Strategy strategy = Strategy::kDict;
  lexaug::AugmentConfig augment;
  theory::TheoryConfig theory;
  std::size_t jobs = 1;
};

// Borrowed resources; which ones are required depends on the strategy.
struct AugmentResources {
  const lexaug::GlossLexicon* lexicon = nullptr;                  // dict
  const std::vector<align::AlignmentSet>* alignments = nullptr;   // all but dict
  const std::unordered_map<std::string, lexaug::SwitchTags>* tags = nullptr;  // pred
};

struct AugmentResult {
  std::vector<Generation> generations;
  std::vector<corpus::SkipRecord> skipped;
};

// Throws Error(kMissingResource) naming the missing input.
void CheckResources(Strategy strategy, const AugmentResources& resources,
                    const corpus::ParallelCorpus& corpus);

// One generation per pair that admits one; per-sentence failures become
// skip records. Each pair draws from Rng::ForSentence(seed, id), so the
// output is identical for every jobs value, and it is in corpus order.
AugmentResult Augment(const corpus::ParallelCorpus& corpus,
                      const AugmentResources& resources,
                      const AugmentOptions& options);

}  // namespace cswaug::pipeline

#endif  // CSWAUG_PIPELINE_H_
