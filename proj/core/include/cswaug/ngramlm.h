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

#ifndef CSWAUG_NGRAMLM_H_
#define CSWAUG_NGRAMLM_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cswaug::lm {

using Sentence = std::vector<std::string>;

inline constexpr std::string_view kUnk = "<unk>";
inline constexpr std::string_view kBos = "<s>";
inline constexpr std::string_view kEos = "</s>";

struct NgramOptions {
  std::size_t order = 3;
  double discount = 0.75;   // in (0, 1)
  std::size_t min_count = 1;  // words seen fewer times map to <unk>
};

// Interpolated Kneser-Ney model with one fixed absolute discount.
//
// The highest order, and any n-gram that starts with <s>, uses raw counts;
// lower orders use continuation counts (number of distinct left
// extensions). Each order interpolates with the next lower one and the
// unigram level interpolates with the uniform distribution over the scoring
// vocabulary, so every conditional distribution over vocab + <unk> + </s>
// sums to one.
class NgramModel {
 public:
  // Throws kEmptyCorpus if the corpus has no sentences and kInvalidArgument
  // for order 0 or a discount outside (0, 1).
  static NgramModel Train(std::span<const Sentence> corpus,
                          const NgramOptions& options = {});

  std::size_t order() const { return options_.order; }
  double discount() const { return options_.discount; }
  const NgramOptions& options() const { return options_; }

  // Words of the training corpus before <unk> mapping.
  const std::unordered_set<std::string>& TrainingVocabulary() const {
    return training_vocab_;
  }
  // Outcomes a conditional distribution ranges over: in-vocabulary words,
  // <unk> and </s>, in id order.
  std::vector<std::string> OutcomeVocabulary() const;

  // P(word | context). Only the last order-1 context words are used; unknown
  // words are scored as <unk>.
  double Prob(std::span<const std::string> context, std::string_view word) const;

  // Contexts (of every length 0..order-1) seen in training.
  std::vector<Sentence> ObservedContexts() const;

  // Text dump with a versioned header. Load(Save(m)) reproduces m exactly.
  void Save(std::ostream& out) const;
  static NgramModel Load(std::istream& in);

 private:
  using Key = std::vector<std::uint32_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  struct ContextStats {
    double total = 0.0;      // sum of adjusted counts
    std::size_t types = 0;   // distinct continuations
  };
  struct Level {
    std::unordered_map<Key, std::uint64_t, KeyHash> raw;
    std::unordered_map<Key, std::uint64_t, KeyHash> adjusted;
    std::unordered_map<Key, ContextStats, KeyHash> contexts;
  };

  std::uint32_t IdOf(std::string_view word) const;
  std::uint32_t Intern(const std::string& word);
  void Finalize();
  double LevelProb(std::size_t level, const Key& context, std::uint32_t word) const;

  NgramOptions options_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::unordered_set<std::string> training_vocab_;
  std::vector<Level> levels_;  // levels_[k-1] holds k-grams
};

// exp(-(sum of ln p) / T), T counting every scored token plus one </s> per
// sentence.
double Perplexity(const NgramModel& model, std::span<const Sentence> corpus);

std::unordered_set<std::string> BuildVocabulary(std::span<const Sentence> corpus);

// Percentage of test tokens not in vocab. Throws kInvalidArgument when the
// test corpus has no tokens.
double OovRate(const std::unordered_set<std::string>& vocab,
               std::span<const Sentence> test);

}  // namespace cswaug::lm

#endif  // CSWAUG_NGRAMLM_H_
