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
#include <set>

#include <gtest/gtest.h>

#include "cswaug/rng.h"
#include "cswaug/utf8.h"

namespace cswaug {
namespace {

TEST(Utf8, DecodesMixedScripts) {
  EXPECT_EQ(utf8::Decode("aب€😀"), (std::u32string{U'a', U'ب', U'€', U'😀'}));
  EXPECT_EQ(utf8::Encode(U"ok مرحبا"), "ok مرحبا");
}

TEST(Utf8, MalformedInputBecomesReplacementCharacters) {
  const char32_t bad = utf8::kReplacementChar;
  EXPECT_EQ(utf8::Decode("\xC0\xAF"), (std::u32string{bad}));       // overlong
  EXPECT_EQ(utf8::Decode("\xED\xA0\x80"), (std::u32string{bad}));   // surrogate
  EXPECT_EQ(utf8::Decode("a\xE2\x82"), (std::u32string{U'a', bad})); // truncated
  EXPECT_EQ(utf8::Decode("\xFF" "b"), (std::u32string{bad, U'b'}));
}

TEST(Utf8Property, EncodeDecodeRoundTrip) {
  std::mt19937 gen(97);
  std::uniform_int_distribution<std::uint32_t> cp(0, 0x10FFFF);
  for (int trial = 0; trial < 2000; ++trial) {
    std::u32string s;
    for (std::size_t k = 0; k < gen() % 12; ++k) {
      char32_t c = cp(gen);
      if (c >= 0xD800 && c <= 0xDFFF) c = U'x';
      s.push_back(c);
    }
    ASSERT_EQ(utf8::Decode(utf8::Encode(s)), s);
  }
}

TEST(Utf8Property, DecodeIsTotalOnRandomBytes) {
  std::mt19937 gen(101);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string bytes;
    for (std::size_t k = 0; k < gen() % 16; ++k) bytes.push_back(static_cast<char>(gen()));
    const std::u32string decoded = utf8::Decode(bytes);
    ASSERT_LE(decoded.size(), bytes.size());
    // Re-encoding valid output decodes to the same code points.
    ASSERT_EQ(utf8::Decode(utf8::Encode(decoded)), decoded);
  }
}

TEST(Rng, SentenceStreamsDependOnSeedAndId) {
  Rng a = Rng::ForSentence(7, "s1");
  Rng b = Rng::ForSentence(7, "s1");
  Rng c = Rng::ForSentence(7, "s2");
  Rng d = Rng::ForSentence(8, "s1");
  const auto first = a();
  EXPECT_EQ(first, b());
  EXPECT_NE(first, c());
  EXPECT_NE(first, d());
  EXPECT_NE(SentenceSeed(0, "ab"), SentenceSeed(0, "ba"));
}

TEST(Rng, UniformIndexCoversTheRangeEvenly) {
  Rng rng(3);
  constexpr std::size_t kBuckets = 7;
  constexpr int kDraws = 70000;
  std::vector<int> counts(kBuckets, 0);
  for (int i = 0; i < kDraws; ++i) ++counts[rng.UniformIndex(kBuckets)];
  double chi2 = 0.0;
  const double expected = static_cast<double>(kDraws) / kBuckets;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 6 degrees of freedom, 0.999 quantile.
  EXPECT_LT(chi2, 22.458);
  EXPECT_EQ(rng.UniformIndex(1), 0u);
}

}  // namespace
}  // namespace cswaug
