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

#include "cswaug/reproduce.h"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cswaug/error.h"

namespace cswaug::reproduce {
namespace {

PublishedP Exactly(double value, int decimals) { return {value, decimals, false}; }
PublishedP Below(double value) { return {value, 2, true}; }

bool SameAtPrecision(double computed, const PublishedP& published) {
  const double scale = std::pow(10.0, published.decimals);
  return std::llround(computed * scale) == std::llround(published.value * scale);
}

}  // namespace

std::string PublishedP::ToString() const {
  std::ostringstream out;
  out << (upper_bound ? "<" : "") << std::fixed << std::setprecision(decimals)
      << value;
  return out.str();
}

const std::vector<PublishedCorrelation>& PublishedCorrelations() {
  static const std::vector<PublishedCorrelation> rows = {
      {"naturalness vs zero-shot MT chrF++", "naturalness_percent",
       "chrfpp_zero", 6, 0.92, Below(0.05), Tier::kTight},
      {"naturalness vs non-zero-shot MT chrF++", "naturalness_percent",
       "chrfpp_nonzero", 8, 0.97, Below(0.05), Tier::kTight},
      {"ASR LM PPL vs CSW WER", "ppl", "wer_nonzero", 8, 0.89,
       Exactly(0.003, 3), Tier::kTight},
      {"ASR OOV vs CSW WER", "oov", "wer_nonzero", 8, 0.84, Exactly(0.008, 3),
       Tier::kTight},
      {"MT LM PPL vs non-zero-shot chrF++", "mt_ppl", "chrfpp_nonzero", 8,
       -0.77, Exactly(0.027, 3), Tier::kTight},
      {"ASR LM PPL vs naturalness", "ppl", "naturalness_percent", 8, -0.62,
       Exactly(0.10, 2), Tier::kTight},
      {"|Train| vs CSW WER", "train_size", "wer_nonzero", 8, -0.01,
       Exactly(0.98, 2), Tier::kTight},
      {"|Train| vs non-zero-shot chrF++", "train_size", "chrfpp_nonzero", 8,
       -0.60, Exactly(0.12, 2), Tier::kTight},
      {"naturalness vs zero-shot ASR WER", "naturalness_percent", "wer_zero", 6,
       0.19, Exactly(0.73, 2), Tier::kLoose},
      {"naturalness vs non-zero-shot ASR WER", "naturalness_percent",
       "wer_nonzero", 8, -0.56, Exactly(0.15, 2), Tier::kLoose},
      {"naturalness vs constrained ASR WER", "naturalness_percent",
       "wer_constrained", 8, -0.26, Exactly(0.54, 2), Tier::kLoose},
  };
  return rows;
}

ReproductionRow Check(const PublishedCorrelation& published,
                      const eval::ScoreTable& table) {
  ReproductionRow row;
  row.published = published;
  try {
    row.computed = eval::Correlate(table, published.x, published.y);
  } catch (const Error& e) {
    row.note = e.what();
    return row;
  }
  const eval::CorrelationResult& c = *row.computed;
  row.comparable = c.n == published.n;
  if (!row.comparable) {
    row.note = "non-comparable: n=" + std::to_string(c.n) + ", published n=" +
               std::to_string(published.n);
  }
  const double dr = std::abs(c.r - published.r);
  if (published.tier == Tier::kTight) {
    row.r_ok = dr <= kTightMaxDeltaR;
    row.p_ok = published.p.upper_bound ? c.p < published.p.value
                                       : SameAtPrecision(c.p, published.p);
  } else {
    row.r_ok = dr <= kLooseMaxDeltaR;
    row.p_ok = published.p.upper_bound
                   ? c.p < published.p.value
                   : std::abs(c.p - published.p.value) <= kLooseMaxDeltaP;
  }
  row.pass = row.comparable && row.r_ok && row.p_ok;
  return row;
}

std::vector<ReproductionRow> Reproduce(const eval::ScoreTable& table) {
  std::vector<ReproductionRow> rows;
  for (const PublishedCorrelation& p : PublishedCorrelations()) {
    rows.push_back(Check(p, table));
  }
  return rows;
}

eval::ScoreTable BundledScoreTable() {
  return eval::ScoreTable::Parse(BundledScoreTableCsv(), "published_scores.csv");
}

void WriteReport(std::span<const ReproductionRow> rows, std::ostream& out) {
  out << "label,x,y,tier,n_published,n,r_published,r,p_published,p,status\n";
  for (const ReproductionRow& row : rows) {
    const PublishedCorrelation& pub = row.published;
    out << '"' << pub.label << "\"," << pub.x << ',' << pub.y << ','
        << (pub.tier == Tier::kTight ? "tight" : "loose") << ',' << pub.n << ',';
    if (row.computed) {
      out << row.computed->n;
    }
    out << ',' << std::fixed << std::setprecision(2) << pub.r << ',';
    if (row.computed) out << std::setprecision(4) << row.computed->r;
    out << ',' << pub.p.ToString() << ',';
    if (row.computed) out << std::setprecision(4) << row.computed->p;
    out << ',';
    if (!row.comparable) {
      out << "NON-COMPARABLE";
    } else if (row.pass) {
      out << "PASS";
    } else {
      out << "FAIL(" << (row.r_ok ? "" : "r") << (!row.r_ok && !row.p_ok ? "+" : "")
          << (row.p_ok ? "" : "p") << ")";
    }
    out << '\n';
  }
  out.unsetf(std::ios::fixed);
}

}  // namespace cswaug::reproduce
