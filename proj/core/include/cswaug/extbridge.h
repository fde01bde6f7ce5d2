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

#ifndef CSWAUG_EXTBRIDGE_H_
#define CSWAUG_EXTBRIDGE_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cswaug/corpus.h"
#include "cswaug/lexaug.h"
#include "cswaug/types.h"

// File-based exchange with the external switch-point tagger and the
// back-translation model. All files are UTF-8 with LF line endings.
namespace cswaug::bridge {

struct LineIssue {
  std::size_t line = 0;  // 1-based
  std::string id;
  std::string reason;
};

// JSONL, one {"id": str, "target_tokens": [str, ...]} per pair, in corpus
// order. Returns the number of lines written.
std::size_t ExportPredictionRequests(std::span<const SentencePair> corpus,
                                     const std::filesystem::path& path);

struct PredictionImport {
  std::unordered_map<std::string, lexaug::SwitchTags> tags;
  std::vector<LineIssue> rejected;   // bad tag values, length mismatch, unknown id
  std::vector<LineIssue> warnings;   // duplicate ids (the last line wins)
  std::vector<std::string> missing_ids;  // corpus pairs without tags
};

// Reads JSONL {"id": str, "tags": [0|1, ...]}. Lines that are not valid JSON
// or lack the two fields throw Error(kParseError) naming file and line;
// semantic problems are collected per line.
PredictionImport ImportPredictions(const std::filesystem::path& path,
                                   std::span<const SentencePair> corpus);

// A natural CSW sentence with its embedded-language translation.
struct CswRow {
  std::string id;
  std::string csw;
  std::string translation;  // empty when missing
};

// TSV "id<TAB>csw<TAB>translation"; the translation column may be absent.
std::vector<CswRow> LoadCswRows(const std::filesystem::path& path);

// Writes line-aligned training files for the translation -> CSW direction:
// src_out gets the translation, tgt_out the CSW sentence. Rows without a
// translation are skipped and appended to `skipped`.
std::size_t ExportBtTraining(std::span<const CswRow> rows,
                             const std::filesystem::path& src_out,
                             const std::filesystem::path& tgt_out,
                             std::vector<corpus::SkipRecord>* skipped = nullptr);

struct BtImport {
  std::vector<Generation> generations;
  std::vector<LineIssue> rejected;       // unknown id, empty text
  std::vector<std::string> monolingual_ids;  // kept, but carry no switch
};

// Reads TSV "id<TAB>text" produced by the back-translation model.
BtImport ImportBtOutputs(const std::filesystem::path& path,
                         std::span<const SentencePair> corpus,
                         const corpus::NormalizationPolicy& policy = {});

}  // namespace cswaug::bridge

#endif  // CSWAUG_EXTBRIDGE_H_
