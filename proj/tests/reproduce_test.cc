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

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <gtest/gtest.h>

#include "cswaug/error.h"
#include "cswaug/reproduce.h"
#include "cswaug/score_table.h"
#include "test_support.h"

namespace cswaug::reproduce {
namespace {

using eval::ScoreTable;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cswaug::Error thrown";
  return ErrorCode::kInvalidArgument;
}

constexpr std::string_view kSmallTable =
    "# toy scores\n"
    "technique, a, b, c\n"
    "dict, 1, 2, 5\n"
    "rand, 2, 4, \n"
    "pred, 3, 6.5, 1\n"
    "bt, 4, 8, 2\n";

TEST(ScoreTable, ParsesColumnsAndBlanks) {
  const ScoreTable t = ScoreTable::Parse(kSmallTable);
  EXPECT_EQ(t.columns(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(t.techniques().size(), 4u);
  EXPECT_EQ(t.Get(Strategy::kPred, "b"), 6.5);
  EXPECT_FALSE(t.Get(Strategy::kRand, "c").has_value());
  EXPECT_FALSE(t.Get(Strategy::kEcSpf, "a").has_value());
  EXPECT_FALSE(t.HasColumn("d"));
}

TEST(ScoreTable, RejectsMalformedInput) {
  EXPECT_EQ(CodeOf([] { ScoreTable::Parse("name,a\ndict,1\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ScoreTable::Parse("technique,a\ndict,1,2\n"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ScoreTable::Parse("technique,a\nnope,1\n"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ScoreTable::Parse("technique,a\ndict,1\ndict,2\n"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ScoreTable::Parse("technique,a\ndict,x1\n"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ScoreTable::Parse("# nothing\n"); }), ErrorCode::kParseError);
}

TEST(Correlate, SkipsTechniquesWithBlankCells) {
  const ScoreTable t = ScoreTable::Parse(kSmallTable);
  EXPECT_EQ(eval::Correlate(t, "a", "b").n, 4u);
  const auto ac = eval::Correlate(t, "a", "c");
  EXPECT_EQ(ac.n, 3u);
  const std::vector<double> x = {1, 3, 4}, y = {5, 1, 2};
  EXPECT_DOUBLE_EQ(ac.r, eval::Pearson(x, y).r);
}

TEST(Correlate, ColumnWithItselfIsPerfect) {
  const ScoreTable t = BundledScoreTable();
  for (const std::string& column : t.columns()) {
    EXPECT_NEAR(eval::Correlate(t, column, column).r, 1.0, 1e-12) << column;
  }
}

TEST(Correlate, Errors) {
  const ScoreTable t = ScoreTable::Parse(kSmallTable);
  EXPECT_EQ(CodeOf([&] { eval::Correlate(t, "a", "zzz"); }), ErrorCode::kMissingColumn);
  const std::vector<Strategy> subset = {Strategy::kDict, Strategy::kRand, Strategy::kPred};
  EXPECT_EQ(CodeOf([&] { eval::Correlate(t, "a", "c", subset); }),
            ErrorCode::kMissingColumn);
  EXPECT_EQ(eval::Correlate(t, "a", "b", subset).n, 3u);
}

TEST(BundledTable, CoversEveryPublishedColumn) {
  const ScoreTable t = BundledScoreTable();
  for (const PublishedCorrelation& p : PublishedCorrelations()) {
    EXPECT_TRUE(t.HasColumn(p.x)) << p.x;
    EXPECT_TRUE(t.HasColumn(p.y)) << p.y;
  }
  EXPECT_EQ(PublishedCorrelations().size(), 11u);
}

TEST(Reproduce, TightTierMatchesThePublishedCorrelations) {
  for (const ReproductionRow& row : Reproduce(BundledScoreTable())) {
    if (row.published.tier != Tier::kTight) continue;
    ASSERT_TRUE(row.computed.has_value()) << row.published.label;
    EXPECT_TRUE(row.comparable) << row.published.label;
    EXPECT_LE(std::abs(row.computed->r - row.published.r), kTightMaxDeltaR)
        << row.published.label;
    EXPECT_TRUE(row.pass) << row.published.label;
  }
}

TEST(Reproduce, DroppingATechniqueMakesRowsNonComparable) {
  ScoreTable t = BundledScoreTable();
  t.RemoveTechnique(Strategy::kBt);
  std::size_t non_comparable = 0;
  for (const ReproductionRow& row : Reproduce(t)) {
    if (row.published.n == 8) {
      EXPECT_FALSE(row.comparable) << row.published.label;
      EXPECT_FALSE(row.pass);
      ++non_comparable;
    }
  }
  EXPECT_GT(non_comparable, 0u);
  std::ostringstream report;
  const auto rows = Reproduce(t);
  WriteReport(rows, report);
  EXPECT_NE(report.str().find("NON-COMPARABLE"), std::string::npos);
}

TEST(Reproduce, MissingColumnIsReportedNotThrown) {
  const ReproductionRow row = Check(PublishedCorrelations()[0], ScoreTable::Parse(kSmallTable));
  EXPECT_FALSE(row.computed.has_value());
  EXPECT_FALSE(row.pass);
  EXPECT_FALSE(row.note.empty());
}

TEST(Reproduce, TightPComparesAtPublishedPrecision) {
  PublishedCorrelation pub{"x", "a", "b", 4, 1.0, {0.00, 2, false}, Tier::kTight};
  const ScoreTable t = ScoreTable::Parse(kSmallTable);
  const ReproductionRow row = Check(pub, t);
  ASSERT_TRUE(row.computed.has_value());
  // a and b are nearly collinear, so p rounds to 0.00.
  EXPECT_LT(row.computed->p, 0.005);
  EXPECT_TRUE(row.p_ok);
  pub.p = {0.01, 2, false};
  EXPECT_FALSE(Check(pub, t).p_ok);
  pub.p = {0.05, 2, true};
  EXPECT_TRUE(Check(pub, t).p_ok);
}

TEST(Reproduce, ReportIsDeterministic) {
  std::ostringstream first, second;
  const auto a = Reproduce(BundledScoreTable());
  const auto b = Reproduce(BundledScoreTable());
  WriteReport(a, first);
  WriteReport(b, second);
  EXPECT_EQ(first.str(), second.str());
  const std::string text = first.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 12);
}

}  // namespace
}  // namespace cswaug::reproduce
