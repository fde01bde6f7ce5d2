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

#ifndef CSWAUG_ALIGN_H_
#define CSWAUG_ALIGN_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cswaug::corpus {
struct ParallelCorpus;
}

namespace cswaug::align {

// Inclusive index range [lo, hi].
struct Span {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t size() const { return hi - lo + 1; }
  friend bool operator==(const Span&, const Span&) = default;
};

using Link = std::pair<std::size_t, std::size_t>;  // (source, target)

// Word alignment between one source and one target sentence. Links are kept
// sorted and unique; every index is checked against the sentence lengths.
class AlignmentSet {
 public:
  AlignmentSet() = default;
  // Throws Error(kIndexOutOfRange) for a link outside the declared lengths.
  AlignmentSet(std::size_t src_len, std::size_t tgt_len, std::vector<Link> links);

  std::size_t src_len() const { return src_len_; }
  std::size_t tgt_len() const { return tgt_len_; }
  const std::vector<Link>& links() const { return links_; }

  bool Contains(std::size_t src, std::size_t tgt) const;
  bool IsAligned(std::size_t src) const;
  // Target indices linked to `src`, ascending.
  std::vector<std::size_t> TargetsOf(std::size_t src) const;
  // Source indices linked to `tgt`, ascending.
  std::vector<std::size_t> SourcesOf(std::size_t tgt) const;

  // Pharaoh "i-j" items separated by single spaces, sorted.
  std::string ToPharaoh() const;

  friend bool operator==(const AlignmentSet&, const AlignmentSet&) = default;

 private:
  std::size_t src_len_ = 0;
  std::size_t tgt_len_ = 0;
  std::vector<Link> links_;
};

// Parses whitespace-separated "i-j" items, i the source index and j the
// target index (0-based). With target_first the items read "j-i".
// Throws kMalformedLink or kIndexOutOfRange.
AlignmentSet ParsePharaoh(std::string_view line, std::size_t src_len,
                          std::size_t tgt_len, bool target_first = false);

// Minimal contiguous target span covering every link of the source range,
// or nullopt if the range has no links.
std::optional<Span> TargetSpanFor(const AlignmentSet& a, Span src_range);

// TargetSpanFor, additionally refusing spans that cover a target token
// linked to a source token outside the range. This is the span a source
// range may be replaced with without duplicating target words.
std::optional<Span> ReplaceableSpan(const AlignmentSet& a, Span src_range);

// True iff no link crosses the boundary before source token `boundary`:
// every link (i, j) with i < boundary and (i', j') with i' >= boundary have
// j < j'. Requires 1 <= boundary <= src_len - 1.
bool IsMonotonicBoundary(const AlignmentSet& a, std::size_t boundary);

// One alignment line per input row of the corpus (including skipped rows);
// returns the alignments of the surviving pairs, in corpus order.
std::vector<AlignmentSet> LoadAlignments(const std::filesystem::path& path,
                                         const corpus::ParallelCorpus& corpus,
                                         bool target_first = false);

}  // namespace cswaug::align

#endif  // CSWAUG_ALIGN_H_
