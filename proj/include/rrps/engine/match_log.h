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

#ifndef RRPS_ENGINE_MATCH_LOG_H_
#define RRPS_ENGINE_MATCH_LOG_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rrps/engine/episode.h"

namespace rrps {

// One episode as a single JSON line:
//   {"row_id":..,"col_id":..,"episode_index":..,"seed":..,
//    "actions0":"RPS..","actions1":"..","return0":..}
// The action strings replay to return0 through Payoff.
struct MatchRecord {
  std::int64_t row_id = 0;
  std::int64_t col_id = 0;
  std::int64_t episode_index = 0;
  std::uint64_t seed = 0;
  std::string actions0;
  std::string actions1;
  int return0 = 0;

  static MatchRecord FromEpisode(std::int64_t row, std::int64_t col,
                                 std::int64_t episode, std::uint64_t seed,
                                 const EpisodeResult& result);

  std::string ToJsonLine() const;
  // Throws std::invalid_argument on malformed input.
  static MatchRecord FromJsonLine(const std::string& line);

  // True iff the action strings replay to return0.
  bool Replays() const;
};

void WriteMatchLog(std::ostream& os, const std::vector<MatchRecord>& records);
std::vector<MatchRecord> ReadMatchLog(std::istream& is);

}  // namespace rrps

#endif  // RRPS_ENGINE_MATCH_LOG_H_
