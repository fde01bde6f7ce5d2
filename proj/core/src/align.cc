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

#include "cswaug/align.h"

#include <algorithm>
#include <charconv>
#include <limits>

#include "cswaug/corpus.h"
#include "cswaug/error.h"

namespace cswaug::align {

AlignmentSet::AlignmentSet(std::size_t src_len, std::size_t tgt_len,
                           std::vector<Link> links)
    : src_len_(src_len), tgt_len_(tgt_len), links_(std::move(links)) {
  for (const auto& [s, t] : links_) {
    if (s >= src_len_ || t >= tgt_len_) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "link " + std::to_string(s) + "-" + std::to_string(t) +
                      " outside " + std::to_string(src_len_) + "x" +
                      std::to_string(tgt_len_));
    }
  }
  std::sort(links_.begin(), links_.end());
  links_.erase(std::unique(links_.begin(), links_.end()), links_.end());
}

bool AlignmentSet::Contains(std::size_t src, std::size_t tgt) const {
  return std::binary_search(links_.begin(), links_.end(), Link{src, tgt});
}

bool AlignmentSet::IsAligned(std::size_t src) const {
  auto it = std::lower_bound(links_.begin(), links_.end(), Link{src, 0});
  return it != links_.end() && it->first == src;
}

std::vector<std::size_t> AlignmentSet::TargetsOf(std::size_t src) const {
  std::vector<std::size_t> out;
  for (auto it = std::lower_bound(links_.begin(), links_.end(), Link{src, 0});
       it != links_.end() && it->first == src; ++it) {
    out.push_back(it->second);
  }
  return out;
}

std::vector<std::size_t> AlignmentSet::SourcesOf(std::size_t tgt) const {
  std::vector<std::size_t> out;
  for (const auto& [s, t] : links_) {
    if (t == tgt) out.push_back(s);
  }
  return out;
}

std::string AlignmentSet::ToPharaoh() const {
  std::string out;
  for (const auto& [s, t] : links_) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(s);
    out.push_back('-');
    out += std::to_string(t);
  }
  return out;
}

namespace {

bool ParseIndex(std::string_view text, std::size_t& value) {
  if (text.empty()) return false;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

AlignmentSet ParsePharaoh(std::string_view line, std::size_t src_len,
                          std::size_t tgt_len, bool target_first) {
  std::vector<Link> links;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                 line[pos] == '\r')) {
      ++pos;
    }
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
           line[end] != '\r') {
      ++end;
    }
    const std::string_view item = line.substr(pos, end - pos);
    pos = end;
    const std::size_t dash = item.find('-');
    std::size_t a = 0;
    std::size_t b = 0;
    if (dash == std::string_view::npos || !ParseIndex(item.substr(0, dash), a) ||
        !ParseIndex(item.substr(dash + 1), b)) {
      throw Error(ErrorCode::kMalformedLink, "bad link '" + std::string(item) + "'");
    }
    links.emplace_back(target_first ? b : a, target_first ? a : b);
  }
  return AlignmentSet(src_len, tgt_len, std::move(links));
}

std::optional<Span> TargetSpanFor(const AlignmentSet& a, Span src_range) {
  std::optional<Span> span;
  for (const auto& [s, t] : a.links()) {
    if (s < src_range.lo || s > src_range.hi) continue;
    if (!span) {
      span = Span{t, t};
    } else {
      span->lo = std::min(span->lo, t);
      span->hi = std::max(span->hi, t);
    }
  }
  return span;
}

std::optional<Span> ReplaceableSpan(const AlignmentSet& a, Span src_range) {
  const std::optional<Span> span = TargetSpanFor(a, src_range);
  if (!span) return std::nullopt;
  for (const auto& [s, t] : a.links()) {
    const bool inside_src = s >= src_range.lo && s <= src_range.hi;
    const bool inside_tgt = t >= span->lo && t <= span->hi;
    if (inside_tgt && !inside_src) return std::nullopt;
  }
  return span;
}

bool IsMonotonicBoundary(const AlignmentSet& a, std::size_t boundary) {
  std::size_t left_max = 0;
  bool has_left = false;
  std::size_t right_min = std::numeric_limits<std::size_t>::max();
  for (const auto& [s, t] : a.links()) {
    if (s < boundary) {
      left_max = std::max(left_max, t);
      has_left = true;
    } else {
      right_min = std::min(right_min, t);
    }
  }
  return !has_left || left_max < right_min;
}

std::vector<AlignmentSet> LoadAlignments(const std::filesystem::path& path,
                                         const corpus::ParallelCorpus& corpus,
                                         bool target_first) {
  const std::vector<std::string> lines = corpus::ReadLines(path);
  if (lines.size() != corpus.total_rows) {
    throw Error(ErrorCode::kLineCountMismatch,
                path.string() + " has " + std::to_string(lines.size()) +
                    " lines, corpus has " + std::to_string(corpus.total_rows));
  }
  std::vector<AlignmentSet> out;
  out.reserve(corpus.pairs.size());
  for (std::size_t k = 0; k < corpus.pairs.size(); ++k) {
    const SentencePair& pair = corpus.pairs[k];
    const std::size_t row = corpus.rows[k];
    try {
      out.push_back(ParsePharaoh(lines[row], pair.source.size(),
                                 pair.target.size(), target_first));
    } catch (const Error& e) {
      throw Error(e.code(), corpus::Where(path, row) + ": " + e.message());
    }
  }
  return out;
}

}  // namespace cswaug::align
