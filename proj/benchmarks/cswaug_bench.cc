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

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "cswaug/align.h"
#include "cswaug/corpus.h"
#include "cswaug/eval.h"
#include "cswaug/ngramlm.h"
#include "cswaug/theoryaug.h"

namespace {

using namespace cswaug;

std::vector<std::string> RandomWords(std::mt19937& gen, std::size_t n, std::size_t vocab) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("w" + std::to_string(gen() % vocab));
  return out;
}

void BM_WordAlignment(benchmark::State& state) {
  std::mt19937 gen(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ref = RandomWords(gen, n, 50);
  auto hyp = ref;
  for (auto& w : hyp) {
    if (gen() % 5 == 0) w = "x";
  }
  for (auto _ : state) benchmark::DoNotOptimize(eval::AlignTokens(ref, hyp));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WordAlignment)->RangeMultiplier(4)->Range(8, 512)->Complexity(benchmark::oNSquared);

// Monotone alignment with one local swap: many legal switch points.
void BM_EcEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SentencePair pair;
  pair.id = "b";
  std::vector<align::Link> links;
  for (std::size_t i = 0; i < n; ++i) {
    pair.source.push_back({"ك" + std::to_string(i), Lang::kMatrix});
    pair.target.push_back({"t" + std::to_string(i), Lang::kEmbedded});
    links.emplace_back(i, i == 1 ? 2 : i == 2 ? 1 : i);
  }
  const align::AlignmentSet a(n, n, links);
  theory::TheoryConfig cfg;
  cfg.max_candidates = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(theory::EcGenerations(pair, a, cfg));
}
BENCHMARK(BM_EcEnumeration)->Args({12, 64})->Args({24, 64})->Args({48, 64})->Args({24, 1024});

std::vector<lm::Sentence> RandomCorpus(std::size_t sentences) {
  std::mt19937 gen(3);
  std::vector<lm::Sentence> corpus;
  for (std::size_t i = 0; i < sentences; ++i) corpus.push_back(RandomWords(gen, 5 + gen() % 15, 2000));
  return corpus;
}

void BM_NgramTrain(benchmark::State& state) {
  const auto corpus = RandomCorpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lm::NgramModel::Train(corpus));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NgramTrain)->Arg(1000)->Arg(10000);

void BM_NgramPerplexity(benchmark::State& state) {
  const auto train = RandomCorpus(10000);
  const auto test = RandomCorpus(static_cast<std::size_t>(state.range(0)));
  const lm::NgramModel model = lm::NgramModel::Train(train);
  for (auto _ : state) benchmark::DoNotOptimize(lm::Perplexity(model, test));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NgramPerplexity)->Arg(1000);

void BM_Normalize(benchmark::State& state) {
  const std::string text = "أنا   رايح الـمـكتب   tomorrow, إن شاء الله! Meeting at 9 ";
  for (auto _ : state) benchmark::DoNotOptimize(corpus::Normalize(text));
}
BENCHMARK(BM_Normalize);

}  // namespace

BENCHMARK_MAIN();
