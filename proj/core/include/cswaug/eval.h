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

#ifndef CSWAUG_EVAL_H_
#define CSWAUG_EVAL_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cswaug/rng.h"
#include "cswaug/types.h"

namespace cswaug::eval {

using TokenLists = std::vector<std::vector<std::string>>;

// Switch Point Fraction: language changes between adjacent language-bearing
// tokens divided by the number of such adjacent pairs. Other tokens are
// skipped, so they neither create nor block a switch. 0 for fewer than two
// language-bearing tokens.
double Spf(std::span<const Token> tokens);
std::size_t SwitchPoints(std::span<const Token> tokens);

// At least one Matrix and one Embedded token.
bool IsCodeSwitched(std::span<const Token> tokens);

struct CswStats {
  std::size_t sentences = 0;
  std::size_t csw_sentences = 0;
  double csw_fraction = 0.0;
  double mean_spf = 0.0;  // over code-switched sentences only
  // Embedded tokens over all Matrix + Embedded tokens.
  double embedded_fraction = 0.0;
};

CswStats ComputeCswStats(std::span<const std::vector<Token>> corpus);

struct EditStats {
  std::size_t substitutions = 0;
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::size_t reference_length = 0;
  std::size_t sentences = 0;

  std::size_t errors() const { return substitutions + insertions + deletions; }
  // Percent; micro-averaged over the corpus.
  double rate() const;
};

// Levenshtein alignment with unit costs. Among optimal alignments the
// backtrace prefers substitution/match, then deletion, then insertion.
EditStats AlignTokens(std::span<const std::string> ref,
                      std::span<const std::string> hyp);
EditStats AlignChars(std::span<const std::string> ref,
                     std::span<const std::string> hyp);

// Corpus-level word and character error rates. Characters are the code
// points of the tokens; inter-word spaces are not scored.
EditStats Wer(const TokenLists& refs, const TokenLists& hyps);
EditStats Cer(const TokenLists& refs, const TokenLists& hyps);

struct EvalReport {
  double wer = 0.0;
  double cer = 0.0;
  EditStats words;
  EditStats chars;
};

EvalReport Score(const TokenLists& refs, const TokenLists& hyps);

struct CorrelationResult {
  double r = 0.0;
  double p = 1.0;
  std::size_t n = 0;
};

// Sample Pearson correlation with a two-sided Student-t p-value on n-2
// degrees of freedom. Throws kDegenerateInput for n < 3 or a constant vector.
CorrelationResult Pearson(std::span<const double> x, std::span<const double> y);

// Two-sided p of t = r*sqrt(n-2)/sqrt(1-r^2), via the regularized
// incomplete beta function.
double CorrelationPValue(double r, std::size_t n);

enum class Metric { kWer, kCer };

// Two-sided approximate randomization test on the difference of corpus
// error counts between two systems, swapping the systems' outputs per
// sentence with probability 1/2. Returns (hits + 1) / (resamples + 1).
double PairedSignificance(const TokenLists& refs, const TokenLists& hyps_a,
                          const TokenLists& hyps_b, Metric metric,
                          std::size_t resamples, Rng& rng);

}  // namespace cswaug::eval

#endif  // CSWAUG_EVAL_H_
