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

#include "cswaug/theoryaug.h"

#include <cmath>
#include <optional>

#include "cswaug/error.h"
#include "cswaug/eval.h"
#include "cswaug/lexaug.h"

namespace cswaug::theory {
namespace {

// Enumerates labelings of the source tokens as Matrix/Embedded runs subject
// to per-token, per-boundary and per-segment constraints. A memo of which
// (position, language, remaining boundaries) states can still be completed
// keeps the search output-sensitive.
class PlanEnumerator {
 public:
  PlanEnumerator(const SentencePair& pair, const align::AlignmentSet& alignment,
                 std::vector<bool> switchable, std::vector<bool> legal_boundary,
                 bool allow_all_embedded)
      : n_(pair.source.size()),
        switchable_(std::move(switchable)),
        legal_boundary_(std::move(legal_boundary)),
        allow_all_embedded_(allow_all_embedded),
        embedded_ok_(n_ * n_, false),
        memo_(n_ * 2 * n_, kUnknown) {
    for (std::size_t lo = 0; lo < n_; ++lo) {
      for (std::size_t hi = lo; hi < n_ && switchable_[hi]; ++hi) {
        embedded_ok_[lo * n_ + hi] =
            align::ReplaceableSpan(alignment, {lo, hi}).has_value();
      }
    }
  }

  std::vector<SegmentPlan> Enumerate(std::size_t limit) {
    std::vector<SegmentPlan> plans;
    if (n_ == 0) return plans;
    for (std::size_t boundaries = 0; boundaries < n_; ++boundaries) {
      for (Lang start : {Lang::kMatrix, Lang::kEmbedded}) {
        if (boundaries == 0 &&
            (start == Lang::kMatrix || !allow_all_embedded_)) {
          continue;
        }
        SegmentPlan current;
        Search(0, start, boundaries, current, plans, limit);
        if (plans.size() >= limit) return plans;
      }
    }
    return plans;
  }

 private:
  static constexpr signed char kUnknown = -1;

  bool SegmentOk(std::size_t lo, std::size_t hi, Lang lang) const {
    return lang == Lang::kMatrix || embedded_ok_[lo * n_ + hi];
  }

  static Lang Flip(Lang lang) {
    return lang == Lang::kMatrix ? Lang::kEmbedded : Lang::kMatrix;
  }

  // Whether a segment starting at `pos` in `lang` followed by exactly
  // `remaining` more boundaries can cover the rest of the sentence.
  bool Completable(std::size_t pos, Lang lang, std::size_t remaining) {
    signed char& slot =
        memo_[(pos * 2 + (lang == Lang::kEmbedded ? 1 : 0)) * n_ + remaining];
    if (slot != kUnknown) return slot != 0;
    bool ok = false;
    if (remaining == 0) {
      ok = SegmentOk(pos, n_ - 1, lang);
    } else {
      for (std::size_t end = pos; end + 1 < n_ && !ok; ++end) {
        ok = legal_boundary_[end + 1] && SegmentOk(pos, end, lang) &&
             Completable(end + 1, Flip(lang), remaining - 1);
      }
    }
    slot = ok ? 1 : 0;
    return ok;
  }

  void Search(std::size_t pos, Lang lang, std::size_t remaining,
              SegmentPlan& current, std::vector<SegmentPlan>& plans,
              std::size_t limit) {
    if (plans.size() >= limit || !Completable(pos, lang, remaining)) return;
    if (remaining == 0) {
      current.push_back({{pos, n_ - 1}, lang});
      plans.push_back(current);
      current.pop_back();
      return;
    }
    for (std::size_t end = pos; end + 1 < n_ && plans.size() < limit; ++end) {
      if (!legal_boundary_[end + 1] || !SegmentOk(pos, end, lang)) continue;
      current.push_back({{pos, end}, lang});
      Search(end + 1, Flip(lang), remaining - 1, current, plans, limit);
      current.pop_back();
    }
  }

  std::size_t n_;
  std::vector<bool> switchable_;
  std::vector<bool> legal_boundary_;
  bool allow_all_embedded_;
  std::vector<bool> embedded_ok_;
  std::vector<signed char> memo_;
};

std::vector<Generation> ToGenerations(const SentencePair& pair,
                                      const align::AlignmentSet& alignment,
                                      const std::vector<SegmentPlan>& plans,
                                      Strategy strategy) {
  std::vector<Generation> out;
  out.reserve(plans.size());
  for (const SegmentPlan& plan : plans) {
    std::vector<std::size_t> replaced;
    for (const Segment& seg : plan) {
      if (seg.lang != Lang::kEmbedded) continue;
      for (std::size_t i = seg.range.lo; i <= seg.range.hi; ++i) {
        replaced.push_back(i);
      }
    }
    out.push_back(lexaug::MakeGeneration(pair.id, RenderPlan(pair, alignment, plan),
                                         strategy, std::move(replaced)));
  }
  return out;
}

void CheckLengths(const SentencePair& pair, const align::AlignmentSet& a) {
  if (a.src_len() != pair.source.size() || a.tgt_len() != pair.target.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "alignment lengths do not match pair " + pair.id);
  }
}

}  // namespace

void TheoryConfig::Validate() const {
  if (!(ref_spf >= 0.0 && ref_spf <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "ref_spf must be in [0, 1]");
  }
  if (max_candidates < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_candidates must be >= 1");
  }
}

std::unordered_set<std::string> LoadFunctionWords(
    const std::filesystem::path& path, const corpus::NormalizationPolicy& policy) {
  std::unordered_set<std::string> words;
  for (const std::string& line : corpus::ReadLines(path)) {
    if (!line.empty() && line[0] == '#') continue;
    std::string word = corpus::Normalize(line, policy);
    if (!word.empty()) words.insert(std::move(word));
  }
  return words;
}

std::vector<Token> RenderPlan(const SentencePair& pair,
                              const align::AlignmentSet& alignment,
                              const SegmentPlan& plan) {
  std::vector<Token> out;
  for (const Segment& seg : plan) {
    if (seg.lang == Lang::kEmbedded) {
      const auto span = align::ReplaceableSpan(alignment, seg.range);
      if (!span) {
        throw Error(ErrorCode::kInvalidArgument,
                    "embedded segment without a replaceable span");
      }
      for (std::size_t j = span->lo; j <= span->hi; ++j) {
        out.push_back(pair.target[j]);
      }
    } else {
      for (std::size_t i = seg.range.lo; i <= seg.range.hi; ++i) {
        out.push_back(pair.source[i]);
      }
    }
  }
  return out;
}

std::vector<Generation> EcGenerations(const SentencePair& pair,
                                      const align::AlignmentSet& alignment,
                                      const TheoryConfig& cfg) {
  cfg.Validate();
  CheckLengths(pair, alignment);
  const std::size_t n = pair.source.size();
  std::vector<bool> legal(n + 1, false);
  for (std::size_t b = 1; b < n; ++b) {
    legal[b] = align::IsMonotonicBoundary(alignment, b);
  }
  PlanEnumerator enumerator(pair, alignment, std::vector<bool>(n, true),
                            std::move(legal), /*allow_all_embedded=*/false);
  const auto plans = enumerator.Enumerate(cfg.max_candidates);
  if (plans.empty()) {
    throw Error(ErrorCode::kNoCandidate, "no legal EC switch in " + pair.id);
  }
  return ToGenerations(pair, alignment, plans, Strategy::kEcRand);
}

std::vector<Generation> MlfGenerations(const SentencePair& pair,
                                       const align::AlignmentSet& alignment,
                                       const TheoryConfig& cfg) {
  cfg.Validate();
  CheckLengths(pair, alignment);
  const std::size_t n = pair.source.size();
  std::vector<bool> content(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Token& t = pair.source[i];
    content[i] = t.lang == Lang::kMatrix && !cfg.function_words.contains(t.surface);
  }
  PlanEnumerator enumerator(pair, alignment, std::move(content),
                            std::vector<bool>(n + 1, true),
                            /*allow_all_embedded=*/true);
  const auto plans = enumerator.Enumerate(cfg.max_candidates);
  if (plans.empty()) {
    throw Error(ErrorCode::kNoCandidate,
                "no aligned content-word island in " + pair.id);
  }
  return ToGenerations(pair, alignment, plans, Strategy::kMlRand);
}

const Generation& SampleRandom(std::span<const Generation> candidates, Rng& rng) {
  if (candidates.empty()) throw Error(ErrorCode::kEmptyCandidates, "no candidates");
  return candidates[rng.UniformIndex(candidates.size())];
}

const Generation& SampleSpf(std::span<const Generation> candidates,
                            double ref_spf) {
  if (candidates.empty()) throw Error(ErrorCode::kEmptyCandidates, "no candidates");
  constexpr double kTie = 1e-9;
  std::size_t best = 0;
  double best_dist = std::abs(candidates[0].spf - ref_spf);
  std::size_t best_switches = eval::SwitchPoints(candidates[0].tokens);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double dist = std::abs(candidates[i].spf - ref_spf);
    const std::size_t switches = eval::SwitchPoints(candidates[i].tokens);
    if (dist < best_dist - kTie ||
        (dist <= best_dist + kTie && switches < best_switches)) {
      best = i;
      best_dist = dist;
      best_switches = switches;
    }
  }
  return candidates[best];
}

}  // namespace cswaug::theory
