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

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "cswaug/error.h"
#include "cswaug/ngramlm.h"
#include "oracles.h"

namespace cswaug::lm {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cswaug::Error thrown";
  return ErrorCode::kInvalidArgument;
}

NgramOptions Order(std::size_t order, std::size_t min_count = 1) {
  NgramOptions o;
  o.order = order;
  o.min_count = min_count;
  return o;
}

const std::vector<std::string> kNone;

TEST(NgramModel, UnigramOnRepeatedToken) {
  const std::vector<Sentence> corpus = {{"a", "a", "a"}};
  const NgramModel m = NgramModel::Train(corpus, Order(1));
  // Raw counts a:3, </s>:1; two seen types; three outcomes (a, <unk>, </s>).
  EXPECT_NEAR(m.Prob(kNone, "a"), (3 - 0.75) / 4 + 0.75 * 2 / 4 / 3, 1e-12);
  EXPECT_NEAR(m.Prob(kNone, "<unk>"), 0.75 * 2 / 4 / 3, 1e-12);
  EXPECT_GT(m.Prob(kNone, "a"), m.Prob(kNone, "zzz"));
}

TEST(NgramModel, EmptyCorpusAndBadOptions) {
  EXPECT_EQ(CodeOf([] { NgramModel::Train(std::vector<Sentence>{}); }),
            ErrorCode::kEmptyCorpus);
  NgramOptions bad;
  bad.discount = 1.0;
  const std::vector<Sentence> corpus = {{"a"}};
  EXPECT_EQ(CodeOf([&] { NgramModel::Train(corpus, bad); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { NgramModel::Train(corpus, Order(0)); }),
            ErrorCode::kInvalidArgument);
}

TEST(Perplexity, UnigramAnalyticValue) {
  const std::vector<Sentence> corpus = {{"a", "b"}};
  const NgramModel m = NgramModel::Train(corpus, Order(1));
  // Each of a, b, </s> has raw count 1 out of 3 with 3 seen types and
  // 4 outcomes: p = 0.25 / 3 + 0.75 * 3 / 3 / 4.
  const double p = 0.25 / 3 + 0.75 / 4;
  EXPECT_NEAR(Perplexity(m, corpus), 1.0 / p, 1e-9);
}

TEST(Perplexity, TrainingTextBeatsDisjointText) {
  const std::vector<Sentence> train = {{"a", "b", "c"}, {"a", "c"}};
  const std::vector<Sentence> other = {{"x", "y", "z"}};
  const NgramModel m = NgramModel::Train(train, Order(3));
  EXPECT_LE(Perplexity(m, train), Perplexity(m, other));
}

TEST(Perplexity, RepeatedTokenApproachesOne) {
  const std::vector<Sentence> train = {Sentence(5000, "a")};
  const NgramModel m = NgramModel::Train(train, Order(2));
  const double ppl = Perplexity(m, std::vector<Sentence>{Sentence(200, "a")});
  EXPECT_GE(ppl, 1.0);
  EXPECT_LT(ppl, 1.1);
}

TEST(Perplexity, InvariantToSentenceOrder) {
  const std::vector<Sentence> train = {{"a", "b", "c"}, {"b", "c", "a"}, {"c"}};
  const NgramModel m = NgramModel::Train(train, Order(3));
  std::vector<Sentence> test = {{"a", "b"}, {"c", "a", "q"}, {"b"}};
  const double before = Perplexity(m, test);
  std::reverse(test.begin(), test.end());
  EXPECT_NEAR(Perplexity(m, test), before, 1e-9);
}

std::vector<Sentence> RandomCorpus(std::mt19937& gen, std::size_t vocab) {
  std::vector<Sentence> corpus(1 + gen() % 12);
  for (auto& s : corpus) {
    const std::size_t len = 1 + gen() % 9;
    for (std::size_t k = 0; k < len; ++k) s.push_back("w" + std::to_string(gen() % vocab));
  }
  return corpus;
}

// For every context the model saw, and the empty context, the conditional
// distribution over all outcomes sums to one.
TEST(NgramModelProperty, DistributionsSumToOne) {
  std::mt19937 gen(29);
  std::size_t contexts = 0;
  for (int trial = 0; trial < 240; ++trial) {
    const std::size_t vocab = 1 + gen() % 20;
    const auto corpus = RandomCorpus(gen, vocab);
    NgramOptions opt = Order(1 + trial % 3, 1 + gen() % 2);
    opt.discount = 0.1 + 0.8 * (gen() % 100) / 100.0;
    const NgramModel m = NgramModel::Train(corpus, opt);
    auto ctxs = m.ObservedContexts();
    ctxs.push_back({});
    const auto outcomes = m.OutcomeVocabulary();
    for (const auto& ctx : ctxs) {
      double total = 0.0;
      for (const auto& w : outcomes) total += m.Prob(ctx, w);
      ASSERT_NEAR(total, 1.0, 1e-9) << "trial " << trial;
      ++contexts;
    }
  }
  EXPECT_GE(contexts, 200u);
}

TEST(NgramModelProperty, BigramMatchesTextbookEstimate) {
  std::mt19937 gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto corpus = RandomCorpus(gen, 1 + gen() % 10);
    const NgramModel m = NgramModel::Train(corpus, Order(2));
    const testing::NaiveKneserNeyBigram oracle(corpus, 0.75);
    auto contexts = m.OutcomeVocabulary();
    contexts.push_back("<s>");
    contexts.push_back("never-seen");
    for (const auto& u : contexts) {
      for (const auto& w : m.OutcomeVocabulary()) {
        const std::vector<std::string> ctx = {u};
        ASSERT_NEAR(m.Prob(ctx, w), oracle.Prob(u == "never-seen" ? "<unk>" : u, w), 1e-12)
            << u << " -> " << w;
      }
    }
  }
}

TEST(NgramModel, MinCountMapsRareWordsToUnk) {
  const std::vector<Sentence> corpus = {{"a", "a", "b"}};
  const NgramModel m = NgramModel::Train(corpus, Order(1, 2));
  const auto outcomes = m.OutcomeVocabulary();
  EXPECT_EQ(std::count(outcomes.begin(), outcomes.end(), "b"), 0);
  EXPECT_DOUBLE_EQ(m.Prob(kNone, "b"), m.Prob(kNone, "<unk>"));
}

TEST(NgramModel, SaveLoadRoundTrip) {
  std::mt19937 gen(37);
  const auto corpus = RandomCorpus(gen, 8);
  const NgramModel m = NgramModel::Train(corpus, Order(3));
  std::stringstream buf;
  m.Save(buf);
  EXPECT_EQ(buf.str().rfind("# cswaug-ngram-model v1", 0), 0u);
  const NgramModel back = NgramModel::Load(buf);
  EXPECT_EQ(back.order(), 3u);
  for (const auto& s : corpus) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::vector<std::string> ctx(s.begin(), s.begin() + static_cast<long>(i));
      EXPECT_DOUBLE_EQ(back.Prob(ctx, s[i]), m.Prob(ctx, s[i]));
    }
  }
  EXPECT_DOUBLE_EQ(Perplexity(back, corpus), Perplexity(m, corpus));
  std::stringstream junk("not a model\n");
  EXPECT_EQ(CodeOf([&] { NgramModel::Load(junk); }), ErrorCode::kParseError);
}

TEST(OovRate, Counts) {
  const auto vocab = BuildVocabulary(std::vector<Sentence>{{"a", "b", "c"}});
  EXPECT_DOUBLE_EQ(OovRate(vocab, std::vector<Sentence>{{"a", "b"}}), 0.0);
  EXPECT_DOUBLE_EQ(OovRate(vocab, std::vector<Sentence>{{"x", "y"}}), 100.0);
  EXPECT_DOUBLE_EQ(OovRate(vocab, std::vector<Sentence>{{"a", "b"}, {"c", "z"}}), 25.0);
  EXPECT_EQ(CodeOf([&] { OovRate(vocab, std::vector<Sentence>{}); }),
            ErrorCode::kInvalidArgument);
}

TEST(OovRateProperty, MoreTrainingNeverRaisesOov) {
  std::mt19937 gen(53);
  for (int trial = 0; trial < 200; ++trial) {
    auto train = RandomCorpus(gen, 15);
    const auto test = RandomCorpus(gen, 15);
    const double before = OovRate(BuildVocabulary(train), test);
    train.push_back(RandomCorpus(gen, 15).front());
    ASSERT_LE(OovRate(BuildVocabulary(train), test), before);
  }
}

}  // namespace
}  // namespace cswaug::lm
