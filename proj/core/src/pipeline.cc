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

#include "cswaug/pipeline.h"

#include <algorithm>
#include <optional>
#include <thread>
#include <variant>

#include "cswaug/error.h"
#include "cswaug/rng.h"

namespace cswaug::pipeline {
namespace {

using Outcome = std::variant<Generation, corpus::SkipRecord>;

Generation AugmentPair(const SentencePair& pair, std::size_t index,
                       const AugmentResources& res, const AugmentOptions& opt) {
  Rng rng = Rng::ForSentence(opt.augment.seed, pair.id);
  switch (opt.strategy) {
    case Strategy::kDict:
      return lexaug::DictReplace(pair, *res.lexicon, opt.augment, rng);
    case Strategy::kRand:
      return lexaug::AlignedRandomReplace(pair, (*res.alignments)[index],
                                          opt.augment, rng);
    case Strategy::kPred: {
      auto it = res.tags->find(pair.id);
      if (it == res.tags->end()) {
        throw Error(ErrorCode::kMissingResource, "no switch tags for " + pair.id);
      }
      auto result = lexaug::AlignedPredictedReplace(pair, (*res.alignments)[index],
                                                    it->second);
      if (result.generation.replaced_src_positions.empty()) {
        throw Error(ErrorCode::kNoEligiblePosition,
                    "no tagged run maps onto a source range");
      }
      return std::move(result.generation);
    }
    case Strategy::kEcRand:
    case Strategy::kEcSpf:
    case Strategy::kMlRand:
    case Strategy::kMlSpf: {
      const bool ec = opt.strategy == Strategy::kEcRand ||
                      opt.strategy == Strategy::kEcSpf;
      const bool spf = opt.strategy == Strategy::kEcSpf ||
                       opt.strategy == Strategy::kMlSpf;
      const auto& alignment = (*res.alignments)[index];
      std::vector<Generation> candidates =
          ec ? theory::EcGenerations(pair, alignment, opt.theory)
             : theory::MlfGenerations(pair, alignment, opt.theory);
      Generation chosen = spf ? theory::SampleSpf(candidates, opt.theory.ref_spf)
                              : theory::SampleRandom(candidates, rng);
      chosen.strategy = opt.strategy;
      return chosen;
    }
    case Strategy::kBt:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "bt generations are imported with import-bt, not augmented");
}

bool IsSkippable(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoEligiblePosition:
    case ErrorCode::kNoCandidate:
    case ErrorCode::kTagLengthMismatch:
    case ErrorCode::kMissingResource:
    case ErrorCode::kEmptyCandidates:
      return true;
    default:
      return false;
  }
}

}  // namespace

void CheckResources(Strategy strategy, const AugmentResources& resources,
                    const corpus::ParallelCorpus& corpus) {
  if (strategy == Strategy::kBt) {
    throw Error(ErrorCode::kInvalidArgument,
                "bt generations are imported with import-bt, not augmented");
  }
  if (strategy == Strategy::kDict) {
    if (resources.lexicon == nullptr) {
      throw Error(ErrorCode::kMissingResource,
                  "strategy dict needs a gloss lexicon (--lexicon)");
    }
    return;
  }
  if (resources.alignments == nullptr) {
    throw Error(ErrorCode::kMissingResource,
                "strategy " + std::string(StrategyName(strategy)) +
                    " needs word alignments (--align)");
  }
  if (resources.alignments->size() != corpus.pairs.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "alignment count does not match corpus");
  }
  if (strategy == Strategy::kPred && resources.tags == nullptr) {
    throw Error(ErrorCode::kMissingResource,
                "strategy pred needs switch tags (--tags), see export-pred");
  }
}

AugmentResult Augment(const corpus::ParallelCorpus& corpus,
                      const AugmentResources& resources,
                      const AugmentOptions& options) {
  CheckResources(options.strategy, resources, corpus);
  options.augment.Validate();
  options.theory.Validate();

  const std::size_t n = corpus.pairs.size();
  std::vector<std::optional<Outcome>> outcomes(n);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const SentencePair& pair = corpus.pairs[i];
      try {
        outcomes[i] = AugmentPair(pair, i, resources, options);
      } catch (const Error& e) {
        if (!IsSkippable(e.code())) throw;
        outcomes[i] = corpus::SkipRecord{pair.id, e.what()};
      }
    }
  };

  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) {
    work(0, n);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    {
      std::vector<std::jthread> threads;
      const std::size_t chunk = (n + jobs - 1) / jobs;
      for (std::size_t j = 0; j < jobs; ++j) {
        const std::size_t begin = std::min(n, j * chunk);
        const std::size_t end = std::min(n, begin + chunk);
        threads.emplace_back([&, j, begin, end] {
          try {
            work(begin, end);
          } catch (...) {
            errors[j] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  AugmentResult result;
  for (auto& outcome : outcomes) {
    if (auto* g = std::get_if<Generation>(&*outcome)) {
      result.generations.push_back(std::move(*g));
    } else {
      result.skipped.push_back(std::get<corpus::SkipRecord>(std::move(*outcome)));
    }
  }
  return result;
}

}  // namespace cswaug::pipeline
