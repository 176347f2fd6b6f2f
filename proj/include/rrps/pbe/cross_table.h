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

#ifndef RRPS_PBE_CROSS_TABLE_H_
#define RRPS_PBE_CROSS_TABLE_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rrps/bots/population.h"
#include "rrps/engine/match_log.h"
#include "rrps/pbe/metrics.h"

namespace rrps::pbe {

// Mean return per episode of the row bot (seat 0) against the column bot.
struct CrossTable {
  std::vector<std::string> names;
  std::vector<std::vector<double>> mean;
  std::vector<std::vector<double>> se;
  int episodes_per_cell = 0;
  std::uint64_t seed = 0;

  int size() const { return static_cast<int>(names.size()); }
};

struct CrossTableConfig {
  int episodes_per_cell = 100;
  EpisodeConfig episode;
  std::uint64_t seed = 0;
  int workers = 0;

  void Validate() const;
};

// Receives every episode's record, row by row in canonical (row, col,
// episode) order, whatever the worker count.
using MatchSink = std::function<void(const std::vector<MatchRecord>&)>;

// Plays all N^2 ordered pairs (including self-play), each cell with its own
// fresh bots and episode seeds derived from (seed, row, col, episode). The
// result is bit-identical for any worker count.
CrossTable ComputeCrossTable(const bots::Population& pop,
                             const CrossTableConfig& config,
                             const MatchSink& sink = nullptr);

// Population metrics of each bot from the table: PopulationReturn is the
// row mean, WithinPopExpl the column maximum.
std::vector<MetricsRecord> MetricsFromCrossTable(const CrossTable& table);

// Header "bot,<names...>", then one row per bot with 6-decimal means.
void WriteCrossTableCsv(std::ostream& os, const CrossTable& table);
// Inverse of WriteCrossTableCsv (standard errors are not stored and read
// back as 0). Throws std::invalid_argument on malformed input.
CrossTable ReadCrossTableCsv(std::istream& is);

}  // namespace rrps::pbe

#endif  // RRPS_PBE_CROSS_TABLE_H_
