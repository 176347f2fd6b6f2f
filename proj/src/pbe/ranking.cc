// Copyright 2026 The RRPS Arena Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rrps/pbe/ranking.h"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace rrps::pbe {

std::string FormatMean(double x) {
  if (x == 0.0) x = 0.0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::vector<RankRow> RankPopulation(const std::vector<MetricsRecord>& records) {
  std::vector<RankRow> rows;
  rows.reserve(records.size());
  for (const MetricsRecord& r : records) {
    rows.push_back({0, r.agent, r.pop_return.mean, r.wp_expl.mean,
                    r.agg_score.mean});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const RankRow& a, const RankRow& b) {
                     if (a.agg_score != b.agg_score) {
                       return a.agg_score > b.agg_score;
                     }
                     return a.name < b.name;
                   });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].rank = static_cast<int>(i) + 1;
  }
  return rows;
}

void WriteRankingCsv(std::ostream& os, const std::vector<RankRow>& rows) {
  os << "rank,name,pop_return,wp_expl,agg_score\n";
  for (const RankRow& r : rows) {
    os << r.rank << ',' << r.name << ',' << FormatMean(r.pop_return) << ','
       << FormatMean(r.wp_expl) << ',' << FormatMean(r.agg_score) << '\n';
  }
}

void WriteMetricsCsv(std::ostream& os,
                     const std::vector<MetricsRecord>& records) {
  os << "agent,pop_return,pop_return_se,wp_expl,wp_expl_se,wp_expl_bot,"
        "agg_score,agg_score_se,learned_expl\n";
  for (const MetricsRecord& r : records) {
    os << r.agent << ',' << FormatMean(r.pop_return.mean) << ','
       << FormatMean(r.pop_return.se) << ',' << FormatMean(r.wp_expl.mean)
       << ',' << FormatMean(r.wp_expl.se) << ',' << r.wp_expl_bot << ','
       << FormatMean(r.agg_score.mean) << ',' << FormatMean(r.agg_score.se)
       << ',' << (r.learned_expl ? FormatMean(*r.learned_expl) : "") << '\n';
  }
}

}  // namespace rrps::pbe
