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

#include "cswaug/lexaug.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <utility>

#include "cswaug/error.h"
#include "cswaug/eval.h"

namespace cswaug::lexaug {
namespace {

struct Replacement {
  align::Span src;
  std::vector<Token> tokens;
};

// Replacements must be sorted by src.lo and non-overlapping.
std::vector<Token> Render(std::span<const Token> source,
                          std::span<const Replacement> replacements) {
  std::vector<Token> out;
  std::size_t next = 0;
  for (const Replacement& r : replacements) {
    out.insert(out.end(), source.begin() + static_cast<std::ptrdiff_t>(next),
               source.begin() + static_cast<std::ptrdiff_t>(r.src.lo));
    out.insert(out.end(), r.tokens.begin(), r.tokens.end());
    next = r.src.hi + 1;
  }
  out.insert(out.end(), source.begin() + static_cast<std::ptrdiff_t>(next),
             source.end());
  return out;
}

std::vector<Token> Slice(std::span<const Token> tokens, align::Span span) {
  return {tokens.begin() + static_cast<std::ptrdiff_t>(span.lo),
          tokens.begin() + static_cast<std::ptrdiff_t>(span.hi + 1)};
}

std::size_t CountMatrix(std::span<const Token> tokens) {
  return static_cast<std::size_t>(std::count_if(
      tokens.begin(), tokens.end(),
      [](const Token& t) { return t.lang == Lang::kMatrix; }));
}

// Uniformly chooses min(k, candidates.size()) distinct elements; returns them
// sorted.
std::vector<std::size_t> ChooseDistinct(std::vector<std::size_t> candidates,
                                        std::size_t k, Rng& rng) {
  const std::size_t take = std::min(k, candidates.size());
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + rng.UniformIndex(candidates.size() - i);
    std::swap(candidates[i], candidates[j]);
  }
  candidates.resize(take);
  std::sort(candidates.begin(), candidates.end());
  return candidates;
}

void CheckLengths(const SentencePair& pair, const align::AlignmentSet& a) {
  if (a.src_len() != pair.source.size() || a.tgt_len() != pair.target.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "alignment lengths do not match pair " + pair.id);
  }
}

}  // namespace

void GlossLexicon::Add(std::string_view surface, std::string_view gloss,
                       const corpus::NormalizationPolicy& policy) {
  const std::string key = corpus::Normalize(surface, policy);
  if (key.empty()) return;
  std::vector<Token> tokens;
  try {
    tokens = corpus::NormalizeAndTokenize(gloss, policy);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kEmptySentence) return;
    throw;
  }
  auto& glosses = entries_[key];
  if (std::find(glosses.begin(), glosses.end(), tokens) == glosses.end()) {
    glosses.push_back(std::move(tokens));
  }
}

const std::vector<std::vector<Token>>* GlossLexicon::Find(
    const std::string& surface) const {
  auto it = entries_.find(surface);
  return it == entries_.end() ? nullptr : &it->second;
}

GlossLexicon GlossLexicon::Load(const std::filesystem::path& path,
                                const corpus::NormalizationPolicy& policy) {
  GlossLexicon lexicon;
  const std::vector<std::string> lines = corpus::ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty() || lines[i][0] == '#') continue;
    const auto cols = corpus::SplitTabs(lines[i]);
    if (cols.size() != 2) {
      throw Error(ErrorCode::kParseError,
                  corpus::Where(path, i) + ": expected surface<TAB>gloss");
    }
    lexicon.Add(cols[0], cols[1], policy);
  }
  return lexicon;
}

void AugmentConfig::Validate() const {
  if (!(rate_percent > 0.0 && rate_percent <= 100.0)) {
    throw Error(ErrorCode::kInvalidArgument, "rate_percent must be in (0, 100]");
  }
}

std::size_t ReplacementCount(std::size_t matrix_tokens, const AugmentConfig& cfg) {
  const double exact = static_cast<double>(matrix_tokens) * cfg.rate_percent / 100.0;
  // The epsilon keeps decimal halves such as 9.5 from rounding down after
  // binary representation error.
  const auto rounded = static_cast<std::size_t>(std::floor(exact + 0.5 + 1e-9));
  return std::max(cfg.min_replacements, rounded);
}

Generation MakeGeneration(std::string id, std::vector<Token> tokens,
                          Strategy strategy,
                          std::vector<std::size_t> replaced_src_positions) {
  Generation g;
  g.id = std::move(id);
  g.tokens = std::move(tokens);
  g.strategy = strategy;
  g.replaced_src_positions = std::move(replaced_src_positions);
  g.spf = eval::Spf(g.tokens);
  return g;
}

std::optional<std::string> CheckGeneration(const Generation& g,
                                           const SentencePair& pair) {
  if (g.id != pair.id) return "id mismatch";
  if (g.tokens.empty()) return "no tokens";
  for (const Token& t : g.tokens) {
    if (t.surface.empty()) return "empty token";
    if (t.surface.find_first_of(" \t\n\r") != std::string::npos) {
      return "whitespace in token '" + t.surface + "'";
    }
    if (t.lang != corpus::TagTokenLanguage(t.surface)) {
      return "language tag inconsistent for '" + t.surface + "'";
    }
  }
  if (std::abs(g.spf - eval::Spf(g.tokens)) > 1e-12) return "spf mismatch";
  if (g.spf < 0.0 || g.spf > 1.0) return "spf out of [0,1]";
  const auto& pos = g.replaced_src_positions;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (pos[i] >= pair.source.size()) return "replaced position out of range";
    if (i > 0 && pos[i] <= pos[i - 1]) return "replaced positions not sorted";
  }
  return std::nullopt;
}

Generation DictReplace(const SentencePair& pair, const GlossLexicon& lexicon,
                       const AugmentConfig& cfg, Rng& rng) {
  cfg.Validate();
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < pair.source.size(); ++i) {
    const Token& t = pair.source[i];
    if (t.lang == Lang::kMatrix && lexicon.Find(t.surface) != nullptr) {
      eligible.push_back(i);
    }
  }
  if (eligible.empty()) {
    throw Error(ErrorCode::kNoEligiblePosition,
                "no source token of " + pair.id + " has a gloss");
  }
  const std::size_t k = ReplacementCount(CountMatrix(pair.source), cfg);
  std::vector<std::size_t> chosen = ChooseDistinct(std::move(eligible), k, rng);
  std::vector<Replacement> replacements;
  for (std::size_t i : chosen) {
    const auto& glosses = *lexicon.Find(pair.source[i].surface);
    replacements.push_back({{i, i}, glosses[rng.UniformIndex(glosses.size())]});
  }
  return MakeGeneration(pair.id, Render(pair.source, replacements),
                        Strategy::kDict, std::move(chosen));
}

Generation AlignedRandomReplace(const SentencePair& pair,
                                const align::AlignmentSet& alignment,
                                const AugmentConfig& cfg, Rng& rng) {
  cfg.Validate();
  CheckLengths(pair, alignment);
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < pair.source.size(); ++i) {
    if (pair.source[i].lang == Lang::kMatrix &&
        align::ReplaceableSpan(alignment, {i, i})) {
      eligible.push_back(i);
    }
  }
  if (eligible.empty()) {
    throw Error(ErrorCode::kNoEligiblePosition,
                "no aligned, conflict-free source token in " + pair.id);
  }
  const std::size_t k = ReplacementCount(CountMatrix(pair.source), cfg);
  std::vector<std::size_t> chosen = ChooseDistinct(std::move(eligible), k, rng);
  std::vector<Replacement> replacements;
  for (std::size_t i : chosen) {
    const align::Span span = *align::ReplaceableSpan(alignment, {i, i});
    replacements.push_back({{i, i}, Slice(pair.target, span)});
  }
  return MakeGeneration(pair.id, Render(pair.source, replacements),
                        Strategy::kRand, std::move(chosen));
}

PredictedReplacement AlignedPredictedReplace(const SentencePair& pair,
                                             const align::AlignmentSet& alignment,
                                             const SwitchTags& tags) {
  if (tags.flags.size() != pair.target.size()) {
    throw Error(ErrorCode::kTagLengthMismatch,
                pair.id + ": " + std::to_string(tags.flags.size()) +
                    " tags for " + std::to_string(pair.target.size()) +
                    " target tokens");
  }
  CheckLengths(pair, alignment);
  PredictedReplacement result;
  std::vector<Replacement> replacements;
  std::vector<std::size_t> replaced;
  const std::size_t n = tags.flags.size();
  std::size_t t = 0;
  while (t < n) {
    if (tags.flags[t] == 0) {
      ++t;
      continue;
    }
    align::Span run{t, t};
    while (run.hi + 1 < n && tags.flags[run.hi + 1] != 0) ++run.hi;
    t = run.hi + 1;

    std::vector<std::size_t> sources;
    for (const auto& [s, j] : alignment.links()) {
      if (j >= run.lo && j <= run.hi) sources.push_back(s);
    }
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    if (sources.empty() || sources.back() - sources.front() + 1 != sources.size()) {
      result.skipped_runs.push_back(run);
      continue;
    }
    const align::Span src{sources.front(), sources.back()};
    const auto span = align::ReplaceableSpan(alignment, src);
    if (!span || *span != run) {
      result.skipped_runs.push_back(run);
      continue;
    }
    replacements.push_back({src, Slice(pair.target, run)});
    for (std::size_t i = src.lo; i <= src.hi; ++i) replaced.push_back(i);
  }
  std::sort(replacements.begin(), replacements.end(),
            [](const Replacement& a, const Replacement& b) {
              return a.src.lo < b.src.lo;
            });
  std::sort(replaced.begin(), replaced.end());
  result.generation = MakeGeneration(pair.id, Render(pair.source, replacements),
                                     Strategy::kPred, std::move(replaced));
  return result;
}

SwitchTags MatchSwitchTags(std::span<const Token> csw,
                           std::span<const Token> translation) {
  std::unordered_map<std::string, std::size_t> available;
  for (const Token& t : csw) {
    if (t.lang == Lang::kEmbedded) ++available[corpus::Normalize(t.surface)];
  }
  SwitchTags tags;
  tags.flags.reserve(translation.size());
  for (const Token& t : translation) {
    auto it = available.find(corpus::Normalize(t.surface));
    if (it != available.end() && it->second > 0) {
      --it->second;
      tags.flags.push_back(1);
    } else {
      tags.flags.push_back(0);
    }
  }
  return tags;
}

}  // namespace cswaug::lexaug
