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

#ifndef CSWAUG_REPRODUCE_H_
#define CSWAUG_REPRODUCE_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cswaug/eval.h"
#include "cswaug/score_table.h"

namespace cswaug::reproduce {

// Tolerance tiers for comparing a recomputed correlation with a published
// one. Tight: |dr| <= 0.02 and p equal at the published precision (or
// below a published bound). Loose: |dr| <= 0.07 and |dp| <= 0.05.
enum class Tier { kTight, kLoose };

inline constexpr double kTightMaxDeltaR = 0.02;
inline constexpr double kLooseMaxDeltaR = 0.07;
inline constexpr double kLooseMaxDeltaP = 0.05;

struct PublishedP {
  double value = 0.0;
  int decimals = 2;          // precision the value was reported with
  bool upper_bound = false;  // reported as "p < value"

  std::string ToString() const;
};

struct PublishedCorrelation {
  std::string label;
  std::string x;  // score-table columns
  std::string y;
  std::size_t n = 0;
  double r = 0.0;
  PublishedP p;
  Tier tier = Tier::kTight;
};

struct ReproductionRow {
  PublishedCorrelation published;
  std::optional<eval::CorrelationResult> computed;
  bool comparable = false;  // computed n equals published n
  bool r_ok = false;
  bool p_ok = false;
  bool pass = false;
  std::string note;
};

// The eleven quality/score correlations reported for the augmentation
// techniques, with their tiers.
const std::vector<PublishedCorrelation>& PublishedCorrelations();

ReproductionRow Check(const PublishedCorrelation& published,
                      const eval::ScoreTable& table);
std::vector<ReproductionRow> Reproduce(const eval::ScoreTable& table);

std::string_view BundledScoreTableCsv();
eval::ScoreTable BundledScoreTable();

// CSV: label,x,y,tier,n_published,n,r_published,r,p_published,p,status
void WriteReport(std::span<const ReproductionRow> rows, std::ostream& out);

}  // namespace cswaug::reproduce

#endif  // CSWAUG_REPRODUCE_H_
