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

#include <functional>
#include <sstream>

#include <gtest/gtest.h>

#include "cswaug/error.h"
#include "cswaug/pipeline.h"
#include "test_support.h"

namespace cswaug::pipeline {
namespace {

using testing::LoadToy;
using testing::MakePair;
using testing::ToyData;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cswaug::Error thrown";
  return ErrorCode::kInvalidArgument;
}

std::string Render(const AugmentResult& r) {
  std::ostringstream out;
  corpus::WriteGenerations(r.generations, out);
  corpus::WriteSkipReport(r.skipped, out);
  return out.str();
}

AugmentOptions Options(Strategy s, const ToyData& toy, std::size_t jobs = 1) {
  AugmentOptions o;
  o.strategy = s;
  o.augment.seed = 7;
  o.theory.function_words = toy.function_words;
  o.jobs = jobs;
  return o;
}

TEST(Augment, OutputDoesNotDependOnJobCount) {
  const ToyData toy = LoadToy();
  for (Strategy s : {Strategy::kDict, Strategy::kRand, Strategy::kPred, Strategy::kEcRand,
                     Strategy::kEcSpf, Strategy::kMlRand, Strategy::kMlSpf}) {
    const std::string serial = Render(Augment(toy.corpus, toy.Resources(), Options(s, toy)));
    for (std::size_t jobs : {2u, 3u, 8u}) {
      EXPECT_EQ(Render(Augment(toy.corpus, toy.Resources(), Options(s, toy, jobs))), serial)
          << StrategyName(s) << " jobs=" << jobs;
    }
  }
}

TEST(Augment, EveryToyGenerationIsValidAndLabelled) {
  const ToyData toy = LoadToy();
  for (Strategy s : {Strategy::kDict, Strategy::kRand, Strategy::kPred, Strategy::kEcRand,
                     Strategy::kEcSpf, Strategy::kMlRand, Strategy::kMlSpf}) {
    const AugmentResult r = Augment(toy.corpus, toy.Resources(), Options(s, toy));
    EXPECT_EQ(r.generations.size() + r.skipped.size(), toy.corpus.pairs.size());
    for (const Generation& g : r.generations) {
      EXPECT_EQ(g.strategy, s);
      const SentencePair* pair = toy.corpus.Find(g.id);
      ASSERT_NE(pair, nullptr);
      const auto problem = lexaug::CheckGeneration(g, *pair);
      EXPECT_FALSE(problem.has_value()) << g.id << ": " << problem.value_or("");
    }
  }
}

TEST(Augment, SeedChangesTheOutput) {
  const ToyData toy = LoadToy();
  AugmentOptions a = Options(Strategy::kRand, toy);
  AugmentOptions b = a;
  b.augment.seed = 8;
  EXPECT_NE(Render(Augment(toy.corpus, toy.Resources(), a)),
            Render(Augment(toy.corpus, toy.Resources(), b)));
}

TEST(CheckResources, NamesTheMissingInput) {
  const ToyData toy = LoadToy();
  const AugmentResources none;
  EXPECT_EQ(CodeOf([&] { CheckResources(Strategy::kDict, none, toy.corpus); }),
            ErrorCode::kMissingResource);
  EXPECT_EQ(CodeOf([&] { CheckResources(Strategy::kEcSpf, none, toy.corpus); }),
            ErrorCode::kMissingResource);
  AugmentResources no_tags = toy.Resources();
  no_tags.tags = nullptr;
  try {
    CheckResources(Strategy::kPred, no_tags, toy.corpus);
    FAIL() << "pred without tags accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingResource);
    EXPECT_NE(std::string(e.what()).find("--tags"), std::string::npos);
  }
  EXPECT_EQ(CodeOf([&] { CheckResources(Strategy::kBt, toy.Resources(), toy.corpus); }),
            ErrorCode::kInvalidArgument);
  EXPECT_NO_THROW(CheckResources(Strategy::kMlRand, no_tags, toy.corpus));
}

TEST(CheckResources, AlignmentCountMustMatch) {
  const ToyData toy = LoadToy();
  std::vector<align::AlignmentSet> short_list(toy.alignments.begin(),
                                              toy.alignments.end() - 1);
  AugmentResources r = toy.Resources();
  r.alignments = &short_list;
  EXPECT_EQ(CodeOf([&] { CheckResources(Strategy::kRand, r, toy.corpus); }),
            ErrorCode::kInvalidArgument);
}

TEST(Augment, CrossingOnlyPairIsSkippedForEc) {
  corpus::ParallelCorpus c;
  c.pairs = {MakePair("x", "كتاب احمر", "red book")};
  c.rows = {0};
  c.total_rows = 1;
  const std::vector<align::AlignmentSet> links = {
      align::AlignmentSet(2, 2, {{0, 1}, {1, 0}})};
  AugmentResources r;
  r.alignments = &links;
  AugmentOptions o;
  o.strategy = Strategy::kEcSpf;
  const AugmentResult got = Augment(c, r, o);
  EXPECT_TRUE(got.generations.empty());
  ASSERT_EQ(got.skipped.size(), 1u);
  EXPECT_EQ(got.skipped[0].id, "x");
  EXPECT_NE(got.skipped[0].reason.find("NoCandidate"), std::string::npos)
      << got.skipped[0].reason;
}

TEST(Augment, UnalignedPairIsSkippedForRandAndKeptOrderElsewhere) {
  corpus::ParallelCorpus c;
  c.pairs = {MakePair("a", "هذا كتاب", "this book"), MakePair("b", "هذا قلم", "this pen"),
             MakePair("c", "انا هنا", "i here")};
  c.rows = {0, 1, 2};
  c.total_rows = 3;
  const std::vector<align::AlignmentSet> links = {
      testing::Identity(2), align::AlignmentSet(2, 2, {}), testing::Identity(2)};
  AugmentResources r;
  r.alignments = &links;
  AugmentOptions o;
  o.strategy = Strategy::kRand;
  o.jobs = 2;
  const AugmentResult got = Augment(c, r, o);
  ASSERT_EQ(got.generations.size(), 2u);
  EXPECT_EQ(got.generations[0].id, "a");
  EXPECT_EQ(got.generations[1].id, "c");
  ASSERT_EQ(got.skipped.size(), 1u);
  EXPECT_EQ(got.skipped[0].id, "b");
}

}  // namespace
}  // namespace cswaug::pipeline
