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

#include "cswaug/extbridge.h"

#include <fstream>
#include <unordered_set>

#include "json.hpp"

#include "cswaug/error.h"
#include "cswaug/eval.h"

namespace cswaug::bridge {
namespace {

using nlohmann::json;

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  return out;
}

void Flush(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

bool IsBlank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

std::size_t ExportPredictionRequests(std::span<const SentencePair> corpus,
                                     const std::filesystem::path& path) {
  std::ofstream out = OpenForWrite(path);
  for (const SentencePair& p : corpus) {
    json line = {{"id", p.id}, {"target_tokens", Surfaces(p.target)}};
    out << line.dump() << '\n';
  }
  Flush(out, path);
  return corpus.size();
}

PredictionImport ImportPredictions(const std::filesystem::path& path,
                                   std::span<const SentencePair> corpus) {
  std::unordered_map<std::string_view, const SentencePair*> by_id;
  for (const SentencePair& p : corpus) by_id.emplace(p.id, &p);

  PredictionImport result;
  std::unordered_map<std::string, std::size_t> first_line;
  const std::vector<std::string> lines = corpus::ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (IsBlank(lines[i])) continue;
    const std::size_t line_no = i + 1;
    json doc;
    try {
      doc = json::parse(lines[i]);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParseError,
                  corpus::Where(path, i) + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("id") || !doc["id"].is_string() ||
        !doc.contains("tags") || !doc["tags"].is_array()) {
      throw Error(ErrorCode::kParseError,
                  corpus::Where(path, i) + ": expected {\"id\": str, \"tags\": [...]}");
    }
    std::string id = doc["id"].get<std::string>();
    auto pair = by_id.find(id);
    if (pair == by_id.end()) {
      result.rejected.push_back({line_no, id, "UnknownId"});
      continue;
    }
    lexaug::SwitchTags tags;
    bool valid = true;
    for (const json& v : doc["tags"]) {
      if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
        valid = false;
        break;
      }
      tags.flags.push_back(static_cast<std::uint8_t>(v.get<int>()));
    }
    if (!valid) {
      result.rejected.push_back({line_no, id, "tags must be 0 or 1"});
      continue;
    }
    if (tags.flags.size() != pair->second->target.size()) {
      result.rejected.push_back(
          {line_no, id,
           "TagLengthMismatch: " + std::to_string(tags.flags.size()) +
               " tags for " + std::to_string(pair->second->target.size()) +
               " target tokens"});
      continue;
    }
    auto [it, inserted] = first_line.emplace(id, line_no);
    if (!inserted) {
      result.warnings.push_back(
          {line_no, id,
           "duplicate id (first at line " + std::to_string(it->second) +
               "); last wins"});
    }
    result.tags[id] = std::move(tags);
  }
  for (const SentencePair& p : corpus) {
    if (!result.tags.contains(p.id)) result.missing_ids.push_back(p.id);
  }
  return result;
}

std::vector<CswRow> LoadCswRows(const std::filesystem::path& path) {
  std::vector<CswRow> rows;
  const std::vector<std::string> lines = corpus::ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty() || lines[i][0] == '#') continue;
    const auto cols = corpus::SplitTabs(lines[i]);
    if (cols.size() < 2 || cols.size() > 3) {
      throw Error(ErrorCode::kParseError,
                  corpus::Where(path, i) + ": expected id<TAB>csw[<TAB>translation]");
    }
    rows.push_back({std::string(cols[0]), std::string(cols[1]),
                    cols.size() == 3 ? std::string(cols[2]) : std::string()});
  }
  return rows;
}

std::size_t ExportBtTraining(std::span<const CswRow> rows,
                             const std::filesystem::path& src_out,
                             const std::filesystem::path& tgt_out,
                             std::vector<corpus::SkipRecord>* skipped) {
  std::ofstream src = OpenForWrite(src_out);
  std::ofstream tgt = OpenForWrite(tgt_out);
  std::size_t written = 0;
  for (const CswRow& row : rows) {
    if (IsBlank(row.translation) || IsBlank(row.csw)) {
      if (skipped != nullptr) {
        skipped->push_back({row.id, IsBlank(row.translation) ? "MissingTranslation"
                                                             : "EmptySentence"});
      }
      continue;
    }
    src << row.translation << '\n';
    tgt << row.csw << '\n';
    ++written;
  }
  Flush(src, src_out);
  Flush(tgt, tgt_out);
  return written;
}

BtImport ImportBtOutputs(const std::filesystem::path& path,
                         std::span<const SentencePair> corpus,
                         const corpus::NormalizationPolicy& policy) {
  std::unordered_set<std::string_view> ids;
  for (const SentencePair& p : corpus) ids.insert(p.id);

  BtImport result;
  const std::vector<std::string> lines = corpus::ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty() || lines[i][0] == '#') continue;
    const std::size_t line_no = i + 1;
    const auto cols = corpus::SplitTabs(lines[i]);
    if (cols.size() != 2) {
      throw Error(ErrorCode::kParseError,
                  corpus::Where(path, i) + ": expected id<TAB>text");
    }
    const std::string id(cols[0]);
    if (!ids.contains(id)) {
      result.rejected.push_back({line_no, id, "UnknownId"});
      continue;
    }
    std::vector<Token> tokens;
    try {
      tokens = corpus::NormalizeAndTokenize(cols[1], policy);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptySentence) throw;
      result.rejected.push_back({line_no, id, "EmptySentence"});
      continue;
    }
    if (!eval::IsCodeSwitched(tokens)) result.monolingual_ids.push_back(id);
    result.generations.push_back(
        lexaug::MakeGeneration(id, std::move(tokens), Strategy::kBt, {}));
  }
  return result;
}

}  // namespace cswaug::bridge
