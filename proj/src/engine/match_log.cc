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

#include "rrps/engine/match_log.h"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace rrps {

using json = nlohmann::json;

MatchRecord MatchRecord::FromEpisode(std::int64_t row, std::int64_t col,
                                     std::int64_t episode, std::uint64_t seed,
                                     const EpisodeResult& result) {
  MatchRecord r;
  r.row_id = row;
  r.col_id = col;
  r.episode_index = episode;
  r.seed = seed;
  r.actions0 = ActionString(result.actions, /*mine=*/true);
  r.actions1 = ActionString(result.actions, /*mine=*/false);
  r.return0 = result.return0;
  return r;
}

std::string MatchRecord::ToJsonLine() const {
  // ordered_json keeps the documented field order in the output.
  nlohmann::ordered_json j;
  j["row_id"] = row_id;
  j["col_id"] = col_id;
  j["episode_index"] = episode_index;
  j["seed"] = seed;
  j["actions0"] = actions0;
  j["actions1"] = actions1;
  j["return0"] = return0;
  return j.dump();
}

MatchRecord MatchRecord::FromJsonLine(const std::string& line) {
  try {
    const json j = json::parse(line);
    MatchRecord r;
    r.row_id = j.at("row_id").get<std::int64_t>();
    r.col_id = j.at("col_id").get<std::int64_t>();
    r.episode_index = j.at("episode_index").get<std::int64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.actions0 = j.at("actions0").get<std::string>();
    r.actions1 = j.at("actions1").get<std::string>();
    r.return0 = j.at("return0").get<int>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed match record: ") +
                                e.what());
  }
}

bool MatchRecord::Replays() const {
  try {
    return ReplayReturn(actions0, actions1) == return0;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

void WriteMatchLog(std::ostream& os, const std::vector<MatchRecord>& records) {
  for (const MatchRecord& r : records) os << r.ToJsonLine() << '\n';
}

std::vector<MatchRecord> ReadMatchLog(std::istream& is) {
  std::vector<MatchRecord> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    out.push_back(MatchRecord::FromJsonLine(line));
  }
  return out;
}

}  // namespace rrps
