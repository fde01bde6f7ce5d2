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

#include "cswaug/rng.h"

#include <cassert>

namespace cswaug {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t SentenceSeed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return SplitMix64(SplitMix64(seed) ^ h);
}

Rng Rng::ForSentence(std::uint64_t seed, std::string_view id) {
  return Rng(SentenceSeed(seed, id));
}

std::size_t Rng::UniformIndex(std::size_t n) {
  assert(n > 0);
  const std::uint64_t bound = n;
  // Largest multiple of bound that fits; values at or above it are rejected.
  const std::uint64_t limit = max() - (max() % bound + 1) % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v > limit);
  return static_cast<std::size_t>(v % bound);
}

}  // namespace cswaug
