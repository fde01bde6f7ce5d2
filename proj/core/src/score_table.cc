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

#include "cswaug/score_table.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cswaug/error.h"

namespace cswaug::eval {
namespace {

std::vector<std::string> SplitCsv(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string_view cell = line.substr(
        start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) {
      cell.remove_prefix(1);
    }
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' ||
                             cell.back() == '\r')) {
      cell.remove_suffix(1);
    }
    cells.emplace_back(cell);
    if (comma == std::string_view::npos) return cells;
    start = comma + 1;
  }
}

std::string Loc(std::string_view origin, std::size_t line_index) {
  return std::string(origin) + ":" + std::to_string(line_index + 1);
}

}  // namespace

ScoreTable ScoreTable::Parse(std::string_view csv, std::string_view origin) {
  ScoreTable table;
  std::istringstream in{std::string(csv)};
  std::string line;
  bool have_header = false;
  for (std::size_t i = 0; std::getline(in, line); ++i) {
    if (line.empty() || line[0] == '#' ||
        line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::vector<std::string> cells = SplitCsv(line);
    if (!have_header) {
      if (cells.empty() || cells[0] != "technique") {
        throw Error(ErrorCode::kParseError,
                    Loc(origin, i) + ": first column must be 'technique'");
      }
      table.columns_.assign(cells.begin() + 1, cells.end());
      have_header = true;
      continue;
    }
    if (cells.size() != table.columns_.size() + 1) {
      throw Error(ErrorCode::kParseError,
                  Loc(origin, i) + ": expected " +
                      std::to_string(table.columns_.size() + 1) + " cells");
    }
    const auto technique = ParseStrategy(cells[0]);
    if (!technique) {
      throw Error(ErrorCode::kParseError,
                  Loc(origin, i) + ": unknown technique '" + cells[0] + "'");
    }
    for (const auto& [t, values] : table.rows_) {
      if (t == *technique) {
        throw Error(ErrorCode::kParseError,
                    Loc(origin, i) + ": duplicate technique " + cells[0]);
      }
    }
    std::vector<std::optional<double>> values;
    for (std::size_t c = 1; c < cells.size(); ++c) {
      if (cells[c].empty()) {
        values.emplace_back();
        continue;
      }
      double v = 0.0;
      const char* end = cells[c].data() + cells[c].size();
      auto [ptr, ec] = std::from_chars(cells[c].data(), end, v);
      if (ec != std::errc() || ptr != end) {
        throw Error(ErrorCode::kParseError,
                    Loc(origin, i) + ": not a number '" + cells[c] + "'");
      }
      values.emplace_back(v);
    }
    table.rows_.emplace_back(*technique, std::move(values));
  }
  if (!have_header) throw Error(ErrorCode::kParseError, std::string(origin) + ": no header");
  return table;
}

ScoreTable ScoreTable::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str(), path.string());
}

std::vector<Strategy> ScoreTable::techniques() const {
  std::vector<Strategy> out;
  for (const auto& [t, values] : rows_) out.push_back(t);
  return out;
}

std::optional<std::size_t> ScoreTable::ColumnIndex(std::string_view column) const {
  auto it = std::find(columns_.begin(), columns_.end(), column);
  if (it == columns_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns_.begin());
}

bool ScoreTable::HasColumn(std::string_view column) const {
  return ColumnIndex(column).has_value();
}

std::optional<double> ScoreTable::Get(Strategy technique,
                                      std::string_view column) const {
  const auto c = ColumnIndex(column);
  if (!c) return std::nullopt;
  for (const auto& [t, values] : rows_) {
    if (t == technique) return values[*c];
  }
  return std::nullopt;
}

void ScoreTable::RemoveTechnique(Strategy technique) {
  std::erase_if(rows_, [technique](const auto& row) { return row.first == technique; });
}

CorrelationResult Correlate(const ScoreTable& table, std::string_view x,
                            std::string_view y, std::span<const Strategy> subset) {
  for (std::string_view column : {x, y}) {
    if (!table.HasColumn(column)) {
      throw Error(ErrorCode::kMissingColumn, "no column '" + std::string(column) + "'");
    }
  }
  std::vector<double> xs;
  std::vector<double> ys;
  const std::vector<Strategy> all = table.techniques();
  const bool explicit_subset = !subset.empty();
  for (Strategy t : explicit_subset ? std::vector<Strategy>(subset.begin(), subset.end())
                                    : all) {
    const auto vx = table.Get(t, x);
    const auto vy = table.Get(t, y);
    if (!vx || !vy) {
      if (explicit_subset) {
        throw Error(ErrorCode::kMissingColumn,
                    "no value of " + std::string(!vx ? x : y) + " for " +
                        std::string(StrategyName(t)));
      }
      continue;
    }
    xs.push_back(*vx);
    ys.push_back(*vy);
  }
  return Pearson(xs, ys);
}

}  // namespace cswaug::eval
