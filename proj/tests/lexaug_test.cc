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
#include <functional>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "cswaug/error.h"
#include "cswaug/lexaug.h"
#include "cswaug/rng.h"
#include "test_support.h"

namespace cswaug::lexaug {
namespace {

using align::AlignmentSet;
using testing::MakePair;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cswaug::Error thrown";
  return ErrorCode::kInvalidArgument;
}

AugmentConfig Rate(double rate, std::size_t min_replacements = 1) {
  AugmentConfig cfg;
  cfg.rate_percent = rate;
  cfg.min_replacements = min_replacements;
  return cfg;
}

TEST(ReplacementCount, RoundsHalfUpWithFloor) {
  EXPECT_EQ(ReplacementCount(10, Rate(19)), 2u);   // 1.9
  EXPECT_EQ(ReplacementCount(2, Rate(19)), 1u);    // 0.38, min rule
  EXPECT_EQ(ReplacementCount(2, Rate(19, 0)), 0u);
  EXPECT_EQ(ReplacementCount(5, Rate(10)), 1u);    // 0.5 rounds up
  EXPECT_EQ(ReplacementCount(50, Rate(19)), 10u);  // 9.5 rounds up
  EXPECT_EQ(ReplacementCount(20, Rate(100)), 20u);
}

TEST(AugmentConfig, RejectsOutOfRangeRates) {
  EXPECT_EQ(CodeOf([] { Rate(0).Validate(); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { Rate(100.5).Validate(); }), ErrorCode::kInvalidArgument);
}

GlossLexicon SmallLexicon() {
  GlossLexicon lex;
  lex.Add("كتاب", "book");
  lex.Add("بيت", "the house");
  lex.Add("كبير", "big");
  return lex;
}

TEST(DictReplace, ReplacesWithGlossesAndRecordsPositions) {
  const SentencePair pair = MakePair("d", "الولد قرا كتاب في بيت كبير", "x");
  Rng rng(1);
  const Generation g = DictReplace(pair, SmallLexicon(), Rate(19), rng);
  ASSERT_EQ(g.replaced_src_positions.size(), 1u);
  const std::size_t pos = g.replaced_src_positions[0];
  EXPECT_TRUE(pos == 2 || pos == 4 || pos == 5);
  EXPECT_EQ(g.strategy, Strategy::kDict);
  EXPECT_EQ(CheckGeneration(g, pair), std::nullopt);
}

TEST(DictReplace, MinRuleForcesOneReplacement) {
  const SentencePair pair = MakePair("d", "كتاب", "book");
  Rng rng(1);
  const Generation g = DictReplace(pair, SmallLexicon(), Rate(1), rng);
  EXPECT_EQ(Surfaces(g.tokens), (std::vector<std::string>{"book"}));
}

TEST(DictReplace, MultiTokenGlossExpandsInPlace) {
  const SentencePair pair = MakePair("d", "في بيت", "x");
  Rng rng(1);
  const Generation g = DictReplace(pair, SmallLexicon(), Rate(19), rng);
  EXPECT_EQ(Surfaces(g.tokens), (std::vector<std::string>{"في", "the", "house"}));
  EXPECT_EQ(g.replaced_src_positions, (std::vector<std::size_t>{1}));
}

TEST(DictReplace, NoGlossIsAnError) {
  const SentencePair pair = MakePair("d", "انا رايح", "x");
  Rng rng(1);
  EXPECT_EQ(CodeOf([&] { DictReplace(pair, SmallLexicon(), Rate(19), rng); }),
            ErrorCode::kNoEligiblePosition);
}

TEST(DictReplace, GlossChoiceIsUniform) {
  GlossLexicon lex;
  for (const char* g : {"car", "auto", "vehicle"}) lex.Add("عربية", g);
  const SentencePair pair = MakePair("d", "عربية", "x");
  std::map<std::string, int> seen;
  for (std::uint64_t seed = 0; seed < 900; ++seed) {
    Rng rng = Rng::ForSentence(seed, pair.id);
    ++seen[DictReplace(pair, lex, Rate(19), rng).tokens[0].surface];
  }
  ASSERT_EQ(seen.size(), 3u);
  double chi2 = 0.0;
  for (const auto& [w, c] : seen) chi2 += (c - 300.0) * (c - 300.0) / 300.0;
  EXPECT_LT(chi2, 9.21);  // df 2 at 1%
}

TEST(GlossLexicon, LoadsRepeatedLinesAsAlternatives) {
  testing::TempDir dir;
  testing::WriteText(dir / "lex.tsv", "# surface\tgloss\nأكل\tfood\nاكل\teat\nبيت\tthe house\n");
  const GlossLexicon lex = GlossLexicon::Load(dir / "lex.tsv");
  const auto* food = lex.Find("اكل");  // both keys normalize the same
  ASSERT_NE(food, nullptr);
  EXPECT_EQ(food->size(), 2u);
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(lex.Find("nothing"), nullptr);
}

// Source of n Matrix tokens where token i glosses to i % 3 + 1 English tokens.
struct DictFixture {
  SentencePair pair;
  GlossLexicon lexicon;
  std::map<std::string, std::vector<std::string>> gloss;
};

DictFixture RandomDictFixture(std::mt19937& gen) {
  static const std::vector<std::string> arabic = {"كتاب", "بيت", "ولد", "شارع",
                                                  "قلم", "باب", "نور", "جبل"};
  DictFixture f;
  const std::size_t n = 1 + gen() % 12;
  std::string src;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& w = arabic[gen() % arabic.size()];
    src += (src.empty() ? "" : " ") + w;
  }
  f.pair = MakePair("p", src, "x");
  for (std::size_t k = 0; k < arabic.size(); ++k) {
    if (gen() % 3 == 0) continue;  // some words lack a gloss
    std::vector<std::string> words;
    for (std::size_t m = 0; m <= k % 3; ++m) words.push_back("g" + std::to_string(k));
    std::string joined;
    for (const auto& w : words) joined += (joined.empty() ? "" : " ") + w;
    f.lexicon.Add(arabic[k], joined);
    f.gloss[arabic[k]] = words;
  }
  return f;
}

TEST(DictReplaceProperty, CountIsExactAndUntouchedTokensSurvive) {
  std::mt19937 gen(17);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    DictFixture f = RandomDictFixture(gen);
    const AugmentConfig cfg = Rate(5.0 + static_cast<double>(gen() % 95));
    std::size_t eligible = 0;
    for (const Token& t : f.pair.source) eligible += f.gloss.contains(t.surface);
    Rng rng(gen());
    if (eligible == 0) {
      EXPECT_EQ(CodeOf([&] { DictReplace(f.pair, f.lexicon, cfg, rng); }),
                ErrorCode::kNoEligiblePosition);
      continue;
    }
    const Generation g = DictReplace(f.pair, f.lexicon, cfg, rng);
    const std::size_t k = ReplacementCount(f.pair.source.size(), cfg);
    ASSERT_EQ(g.replaced_src_positions.size(), std::min(k, eligible));
    // Rebuild the expected output from the recorded positions.
    std::vector<std::string> expected;
    for (std::size_t i = 0; i < f.pair.source.size(); ++i) {
      const std::string& s = f.pair.source[i].surface;
      if (std::binary_search(g.replaced_src_positions.begin(),
                             g.replaced_src_positions.end(), i)) {
        ASSERT_TRUE(f.gloss.contains(s));
        expected.insert(expected.end(), f.gloss[s].begin(), f.gloss[s].end());
      } else {
        expected.push_back(s);
      }
    }
    ASSERT_EQ(Surfaces(g.tokens), expected);
    ASSERT_EQ(CheckGeneration(g, f.pair), std::nullopt);
    ++checked;
  }
  EXPECT_GE(checked, 200);
}

TEST(AlignedRandomReplace, IdentityReplacesOneToken) {
  const SentencePair pair = MakePair("r", "انا رايح", "i going");
  Rng rng(3);
  const Generation g = AlignedRandomReplace(pair, testing::Identity(2), Rate(19), rng);
  ASSERT_EQ(g.replaced_src_positions.size(), 1u);
  const std::size_t i = g.replaced_src_positions[0];
  std::vector<std::string> expected = {"انا", "رايح"};
  expected[i] = pair.target[i].surface;
  EXPECT_EQ(Surfaces(g.tokens), expected);
  EXPECT_EQ(g.tokens[i].lang, Lang::kEmbedded);
}

TEST(AlignedRandomReplace, UnalignedSourceIsAnError) {
  const SentencePair pair = MakePair("r", "انا رايح", "i going");
  Rng rng(3);
  EXPECT_EQ(CodeOf([&] {
              AlignedRandomReplace(pair, AlignmentSet(2, 2, {}), Rate(19), rng);
            }),
            ErrorCode::kNoEligiblePosition);
}

TEST(AlignedRandomReplace, SkipsConflictedPositions) {
  // Source 0 spans targets 0..2 but target 1 belongs to source 1.
  const SentencePair pair = MakePair("r", "البيت الكبير", "the big house");
  const AlignmentSet a(2, 3, {{0, 0}, {0, 2}, {1, 1}});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const Generation g = AlignedRandomReplace(pair, a, Rate(19), rng);
    ASSERT_EQ(g.replaced_src_positions, (std::vector<std::size_t>{1}));
    ASSERT_EQ(Surfaces(g.tokens), (std::vector<std::string>{"البيت", "big"}));
  }
}

TEST(AlignedRandomReplace, PositionChoiceIsUniform) {
  const SentencePair pair = MakePair("u", "ا ب ت ث ج ح", "a b c d e f");
  std::vector<int> counts(6, 0);
  const int draws = 600;
  for (int seed = 0; seed < draws; ++seed) {
    Rng rng = Rng::ForSentence(static_cast<std::uint64_t>(seed), pair.id);
    const Generation g = AlignedRandomReplace(pair, testing::Identity(6), Rate(19), rng);
    ASSERT_EQ(g.replaced_src_positions.size(), 1u);
    ++counts[g.replaced_src_positions[0]];
  }
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - 100.0) * (c - 100.0) / 100.0;
  EXPECT_LT(chi2, 15.086);  // df 5 at 1%
}

// Injected tokens are drawn from the target side, and a fixed seed fixes
// the output.
TEST(AlignedRandomReplaceProperty, InjectedTokensComeFromTargetAndSeedsRepeat) {
  std::mt19937 gen(23);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t s = 1 + gen() % 7;
    const std::size_t t = 1 + gen() % 7;
    std::string src, tgt;
    for (std::size_t i = 0; i < s; ++i) src += (i ? " " : "") + std::string("س") + std::to_string(i);
    for (std::size_t j = 0; j < t; ++j) tgt += (j ? " " : "") + std::string("w") + std::to_string(j);
    const SentencePair pair = MakePair("q" + std::to_string(trial), src, tgt);
    std::vector<align::Link> links;
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        if (gen() % 4 == 0) links.emplace_back(i, j);
      }
    }
    const AlignmentSet a(s, t, links);
    const std::uint64_t seed = gen();
    Rng r1 = Rng::ForSentence(seed, pair.id);
    Rng r2 = Rng::ForSentence(seed, pair.id);
    Generation g1, g2;
    try {
      g1 = AlignedRandomReplace(pair, a, Rate(40), r1);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::kNoEligiblePosition);
      continue;
    }
    g2 = AlignedRandomReplace(pair, a, Rate(40), r2);
    ASSERT_EQ(g1.Text(), g2.Text());
    ASSERT_EQ(g1.replaced_src_positions, g2.replaced_src_positions);
    std::map<std::string, int> budget;
    for (const Token& tok : pair.target) ++budget[tok.surface];
    for (const Token& tok : g1.tokens) {
      if (tok.lang == Lang::kEmbedded) {
        ASSERT_GE(--budget[tok.surface], 0);
      }
    }
    ASSERT_EQ(CheckGeneration(g1, pair), std::nullopt);
    ++checked;
  }
  EXPECT_GE(checked, 200);
}

SwitchTags Tags(std::vector<std::uint8_t> flags) { return {std::move(flags)}; }

TEST(AlignedPredictedReplace, AllZeroTagsIsIdentity) {
  const SentencePair pair = MakePair("p", "ا ب ت", "a b c");
  const auto r = AlignedPredictedReplace(pair, testing::Identity(3), Tags({0, 0, 0}));
  EXPECT_EQ(r.generation.tokens, pair.source);
  EXPECT_TRUE(r.generation.replaced_src_positions.empty());
}

TEST(AlignedPredictedReplace, ReplacesTaggedToken) {
  const SentencePair pair = MakePair("p", "ا ب ت", "a b c");
  const auto r = AlignedPredictedReplace(pair, testing::Identity(3), Tags({0, 1, 0}));
  EXPECT_EQ(Surfaces(r.generation.tokens), (std::vector<std::string>{"ا", "b", "ت"}));
  EXPECT_EQ(r.generation.replaced_src_positions, (std::vector<std::size_t>{1}));
}

TEST(AlignedPredictedReplace, AllOnesIdentityGivesTarget) {
  const SentencePair pair = MakePair("p", "ا ب ت ث", "a b c d");
  const auto r =
      AlignedPredictedReplace(pair, testing::Identity(4), Tags({1, 1, 1, 1}));
  EXPECT_EQ(r.generation.tokens, pair.target);
}

TEST(AlignedPredictedReplace, NonContiguousSourceRunIsSkipped) {
  // Targets 0 and 1 link to sources 0 and 2: the run's source set {0, 2}
  // has a gap, so nothing is replaced and the run is reported.
  const SentencePair pair = MakePair("p", "ا ب ت", "a b c");
  const AlignmentSet a(3, 3, {{0, 0}, {1, 2}, {2, 1}});
  const auto r = AlignedPredictedReplace(pair, a, Tags({1, 1, 0}));
  EXPECT_EQ(r.generation.tokens, pair.source);
  ASSERT_EQ(r.skipped_runs.size(), 1u);
  EXPECT_EQ(r.skipped_runs[0], (align::Span{0, 1}));
}

TEST(AlignedPredictedReplace, TagLengthMismatch) {
  const SentencePair pair = MakePair("p", "ا ب", "a b");
  EXPECT_EQ(CodeOf([&] {
              AlignedPredictedReplace(pair, testing::Identity(2), Tags({1}));
            }),
            ErrorCode::kTagLengthMismatch);
}

TEST(MatchSwitchTags, GreedyExactMatch) {
  const auto tags = MatchSwitchTags(corpus::Tokenize("انا went home"),
                                    corpus::Tokenize("i went home"));
  EXPECT_EQ(tags.flags, (std::vector<std::uint8_t>{0, 1, 1}));
}

TEST(MatchSwitchTags, MatrixOnlyGivesZeros) {
  const auto tags = MatchSwitchTags(corpus::Tokenize("انا رحت البيت"),
                                    corpus::Tokenize("i went home"));
  EXPECT_EQ(tags.flags, (std::vector<std::uint8_t>{0, 0, 0}));
}

TEST(MatchSwitchTags, EachCswTokenConsumedOnce) {
  const auto tags = MatchSwitchTags(corpus::Tokenize("هو went"),
                                    corpus::Tokenize("went went"));
  EXPECT_EQ(tags.flags, (std::vector<std::uint8_t>{1, 0}));
}

}  // namespace
}  // namespace cswaug::lexaug
