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

#ifndef RRPS_PBE_RANKING_H_
#define RRPS_PBE_RANKING_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "rrps/pbe/metrics.h"

namespace rrps::pbe {

struct RankRow {
  int rank = 0;
  std::string name;
  double pop_return = 0.0;
  double wp_expl = 0.0;
  double agg_score = 0.0;
};

// Sorted by aggregate score, descending; equal scores by name.
std::vector<RankRow> RankPopulation(const std::vector<MetricsRecord>& records);

// Columns: rank,name,pop_return,wp_expl,agg_score.
void WriteRankingCsv(std::ostream& os, const std::vector<RankRow>& rows);

// Fixed 6-decimal rendering used by every CSV writer.
std::string FormatMean(double x);

// One row per record: agent, the three metrics with standard errors, the
// bot attaining wp_expl and learned exploitability (empty when absent).
void WriteMetricsCsv(std::ostream& os,
                     const std::vector<MetricsRecord>& records);

}  // namespace rrps::pbe

#endif  // RRPS_PBE_RANKING_H_
