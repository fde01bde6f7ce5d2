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

#ifndef CSWAUG_SCORE_TABLE_H_
#define CSWAUG_SCORE_TABLE_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cswaug/eval.h"
#include "cswaug/types.h"

namespace cswaug::eval {

// Per-technique scores read from CSV. The header names the columns; the
// first column is "technique" and holds strategy names ("ec-spf"). Empty
// cells are missing values. Lines starting with '#' are comments.
class ScoreTable {
 public:
  static ScoreTable Parse(std::string_view csv, std::string_view origin = "<table>");
  static ScoreTable Load(const std::filesystem::path& path);

  const std::vector<std::string>& columns() const { return columns_; }
  std::vector<Strategy> techniques() const;
  bool HasColumn(std::string_view column) const;
  std::optional<double> Get(Strategy technique, std::string_view column) const;
  void RemoveTechnique(Strategy technique);

 private:
  std::optional<std::size_t> ColumnIndex(std::string_view column) const;

  std::vector<std::string> columns_;
  std::vector<std::pair<Strategy, std::vector<std::optional<double>>>> rows_;
};

// Pearson correlation between two columns. With an empty subset every
// technique that has both values is used, in table order; with a subset,
// each listed technique must have both values (kMissingColumn otherwise).
CorrelationResult Correlate(const ScoreTable& table, std::string_view x,
                            std::string_view y,
                            std::span<const Strategy> subset = {});

}  // namespace cswaug::eval

#endif  // CSWAUG_SCORE_TABLE_H_
