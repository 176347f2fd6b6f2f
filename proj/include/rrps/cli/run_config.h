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

#ifndef RRPS_CLI_RUN_CONFIG_H_
#define RRPS_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rrps/bots/population.h"
#include "rrps/engine/episode.h"
#include "rrps/learners/config.h"
#include "rrps/learners/exploiter.h"
#include "rrps/pbe/holdout.h"

namespace rrps::cli {

// Bad input from the user; the program exits with status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr const char* kSeedEnvVar = "RRPS_SEED";

const std::vector<std::string>& CommandNames();

struct ExploitSettings {
  std::vector<int> recalls = {1, 3, 5};
  std::int64_t episodes = 20000;
  int evaluations = 100;
  int eval_episodes = 10;
  int window = 50;
  double alpha = 0.02;
  double gamma = 0.9;
};

struct HoldoutSettings {
  int n_test = 10;
  int folds = 50;
  int train_episodes = 330;
  int eval_episodes = 10;
};

// Everything a run depends on. A run is reproducible from the JSON echo of
// its config alone.
struct RunConfig {
  std::string command;
  std::string population = "builtin";  // or a catalog file path
  int episodes = 100;                  // per cell, per bot or per pair
  int steps = 1000;                    // K
  std::uint64_t seed = 0;
  int workers = 0;  // 0 = all hardware threads
  std::string out = ".";
  bool match_log = true;            // crosstable
  std::string bot;                  // exploit, play
  bool learned_expl = false;        // eval
  int order = 1;                    // predictability
  std::string crosstable;           // rank: reuse this cross-table CSV
  std::vector<std::string> metrics;  // rank: extra eval records
  learners::AgentConfig agent;
  ExploitSettings exploit;
  HoldoutSettings holdout;

  // Command-specific defaults. Throws UsageError for unknown commands.
  static RunConfig Defaults(const std::string& command);

  // Overlays the keys of `j`. Keys of other commands are accepted so one
  // file can serve several commands; unknown keys throw UsageError.
  void Merge(const nlohmann::json& j);

  // The keys this command reads, in a fixed order.
  nlohmann::ordered_json ToJson() const;

  // Throws UsageError (or std::invalid_argument) for out-of-range values.
  void Validate() const;

  EpisodeConfig Episode() const;
  learners::ExploiterConfig Exploiter() const;
  pbe::HoldoutConfig Holdout() const;
  bots::Population LoadPopulation() const;
};

// Parses the seed environment value; nullopt when unset or empty.
std::optional<std::uint64_t> ParseSeedEnv(const char* value);

}  // namespace rrps::cli

#endif  // RRPS_CLI_RUN_CONFIG_H_
