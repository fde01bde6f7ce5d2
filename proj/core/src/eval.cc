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

#include "cswaug/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include <boost/math/special_functions/beta.hpp>

#include "cswaug/error.h"
#include "cswaug/utf8.h"

namespace cswaug::eval {
namespace {

template <typename T>
EditStats Levenshtein(std::span<const T> ref, std::span<const T> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  std::vector<std::size_t> cost((n + 1) * (m + 1));
  auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };
  for (std::size_t i = 0; i <= n; ++i) cost[at(i, 0)] = i;
  for (std::size_t j = 0; j <= m; ++j) cost[at(0, j)] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diag =
          cost[at(i - 1, j - 1)] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      cost[at(i, j)] =
          std::min({diag, cost[at(i - 1, j)] + 1, cost[at(i, j - 1)] + 1});
    }
  }
  EditStats s;
  s.reference_length = n;
  s.sentences = 1;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = ref[i - 1] == hyp[j - 1];
      if (cost[at(i, j)] == cost[at(i - 1, j - 1)] + (same ? 0 : 1)) {
        if (!same) ++s.substitutions;
        --i, --j;
        continue;
      }
    }
    if (i > 0 && cost[at(i, j)] == cost[at(i - 1, j)] + 1) {
      ++s.deletions;
      --i;
    } else {
      ++s.insertions;
      --j;
    }
  }
  return s;
}

std::u32string Chars(std::span<const std::string> tokens) {
  std::u32string out;
  for (const std::string& t : tokens) out += utf8::Decode(t);
  return out;
}

void Accumulate(EditStats& total, const EditStats& s) {
  total.substitutions += s.substitutions;
  total.insertions += s.insertions;
  total.deletions += s.deletions;
  total.reference_length += s.reference_length;
  total.sentences += s.sentences;
}

template <typename AlignFn>
EditStats CorpusErrors(const TokenLists& refs, const TokenLists& hyps,
                       AlignFn align) {
  if (refs.size() != hyps.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(refs.size()) + " references vs " +
                    std::to_string(hyps.size()) + " hypotheses");
  }
  EditStats total;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    Accumulate(total, align(refs[i], hyps[i]));
  }
  if (total.reference_length == 0) {
    throw Error(ErrorCode::kInvalidArgument, "reference corpus is empty");
  }
  return total;
}

}  // namespace

double Spf(std::span<const Token> tokens) {
  std::size_t bearing = 0;
  for (const Token& t : tokens) bearing += t.lang != Lang::kOther;
  if (bearing < 2) return 0.0;
  return static_cast<double>(SwitchPoints(tokens)) /
         static_cast<double>(bearing - 1);
}

std::size_t SwitchPoints(std::span<const Token> tokens) {
  std::size_t switches = 0;
  const Token* prev = nullptr;
  for (const Token& t : tokens) {
    if (t.lang == Lang::kOther) continue;
    if (prev != nullptr && prev->lang != t.lang) ++switches;
    prev = &t;
  }
  return switches;
}

bool IsCodeSwitched(std::span<const Token> tokens) {
  bool matrix = false;
  bool embedded = false;
  for (const Token& t : tokens) {
    matrix = matrix || t.lang == Lang::kMatrix;
    embedded = embedded || t.lang == Lang::kEmbedded;
  }
  return matrix && embedded;
}

CswStats ComputeCswStats(std::span<const std::vector<Token>> corpus) {
  CswStats stats;
  stats.sentences = corpus.size();
  double spf_sum = 0.0;
  std::size_t embedded = 0;
  std::size_t bearing = 0;
  for (const auto& sentence : corpus) {
    for (const Token& t : sentence) {
      embedded += t.lang == Lang::kEmbedded;
      bearing += t.lang != Lang::kOther;
    }
    if (IsCodeSwitched(sentence)) {
      ++stats.csw_sentences;
      spf_sum += Spf(sentence);
    }
  }
  if (stats.sentences > 0) {
    stats.csw_fraction =
        static_cast<double>(stats.csw_sentences) / static_cast<double>(stats.sentences);
  }
  if (stats.csw_sentences > 0) {
    stats.mean_spf = spf_sum / static_cast<double>(stats.csw_sentences);
  }
  if (bearing > 0) {
    stats.embedded_fraction =
        static_cast<double>(embedded) / static_cast<double>(bearing);
  }
  return stats;
}

double EditStats::rate() const {
  if (reference_length == 0) return 0.0;
  return 100.0 * static_cast<double>(errors()) /
         static_cast<double>(reference_length);
}

EditStats AlignTokens(std::span<const std::string> ref,
                      std::span<const std::string> hyp) {
  return Levenshtein<std::string>(ref, hyp);
}

EditStats AlignChars(std::span<const std::string> ref,
                     std::span<const std::string> hyp) {
  const std::u32string r = Chars(ref);
  const std::u32string h = Chars(hyp);
  return Levenshtein<char32_t>(r, h);
}

EditStats Wer(const TokenLists& refs, const TokenLists& hyps) {
  return CorpusErrors(refs, hyps, [](const auto& r, const auto& h) {
    return AlignTokens(r, h);
  });
}

EditStats Cer(const TokenLists& refs, const TokenLists& hyps) {
  return CorpusErrors(refs, hyps, [](const auto& r, const auto& h) {
    return AlignChars(r, h);
  });
}

EvalReport Score(const TokenLists& refs, const TokenLists& hyps) {
  EvalReport report;
  report.words = Wer(refs, hyps);
  report.chars = Cer(refs, hyps);
  report.wer = report.words.rate();
  report.cer = report.chars.rate();
  return report;
}

double CorrelationPValue(double r, std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kDegenerateInput, "need n >= 3");
  const double df = static_cast<double>(n - 2);
  const double r2 = r * r;
  if (r2 >= 1.0) return 0.0;
  const double t2 = r2 * df / (1.0 - r2);
  // P(|T| > t) = I_{df/(df+t^2)}(df/2, 1/2)
  return boost::math::ibeta(df / 2.0, 0.5, df / (df + t2));
}

CorrelationResult Pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch, "x and y differ in length");
  }
  const std::size_t n = x.size();
  if (n < 3) {
    throw Error(ErrorCode::kDegenerateInput,
                "need at least 3 points, got " + std::to_string(n));
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::kDegenerateInput, "constant input vector");
  }
  CorrelationResult result;
  result.n = n;
  result.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  result.p = CorrelationPValue(result.r, n);
  return result;
}

double PairedSignificance(const TokenLists& refs, const TokenLists& hyps_a,
                          const TokenLists& hyps_b, Metric metric,
                          std::size_t resamples, Rng& rng) {
  if (refs.size() != hyps_a.size() || refs.size() != hyps_b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "reference and hypothesis corpora differ in sentence count");
  }
  if (resamples < 1000) {
    throw Error(ErrorCode::kInvalidArgument, "resamples must be >= 1000");
  }
  auto errors = [metric](const auto& ref, const auto& hyp) {
    return static_cast<long long>(metric == Metric::kWer
                                      ? AlignTokens(ref, hyp).errors()
                                      : AlignChars(ref, hyp).errors());
  };
  std::vector<long long> diffs(refs.size());
  long long observed = 0;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    diffs[i] = errors(refs[i], hyps_a[i]) - errors(refs[i], hyps_b[i]);
    observed += diffs[i];
  }
  observed = std::llabs(observed);
  std::size_t hits = 0;
  for (std::size_t r = 0; r < resamples; ++r) {
    long long sum = 0;
    for (long long d : diffs) sum += rng.Coin() ? d : -d;
    if (std::llabs(sum) >= observed) ++hits;
  }
  return static_cast<double>(hits + 1) / static_cast<double>(resamples + 1);
}

}  // namespace cswaug::eval
