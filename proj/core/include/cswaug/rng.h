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

#ifndef CSWAUG_RNG_H_
#define CSWAUG_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace cswaug {

// Deterministic random source. Wraps std::mt19937_64, whose output sequence
// is fixed by the standard, and draws bounded integers by rejection so
// results do not depend on the standard library's distribution code.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for one sentence: seeded from (seed, id) so that
  // parallel and serial runs draw identical values.
  static Rng ForSentence(std::uint64_t seed, std::string_view id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  std::size_t UniformIndex(std::size_t n);
  bool Coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a over the id mixed with the seed through splitmix64.
std::uint64_t SentenceSeed(std::uint64_t seed, std::string_view id);

}  // namespace cswaug

#endif  // CSWAUG_RNG_H_
