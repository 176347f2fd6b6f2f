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

#ifndef RRPS_LEARNERS_CONFIG_H_
#define RRPS_LEARNERS_CONFIG_H_

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "rrps/engine/episode.h"
#include "rrps/learners/qlearning.h"

namespace rrps::learners {

// The agent block of a run config:
//   {algorithm: uniform|rm|rm_plus|saol|swap_rm_plus|qlearn, recall,
//    contexts: none|discrete|experts, persist, alpha, gamma,
//    epsilon_schedule: {start, end, fraction}, episodes, allow_large_table}
struct AgentConfig {
  std::string algorithm = "rm_plus";
  int recall = 1;
  std::string contexts = "discrete";
  bool persist = false;
  double alpha = 0.02;
  double gamma = 0.9;
  EpsilonSchedule epsilon;
  std::int64_t episodes = 1000;  // epsilon horizon for qlearn
  bool allow_large_table = false;

  // Throws std::invalid_argument for unknown keys or bad values.
  static AgentConfig FromJson(const nlohmann::json& j);
  nlohmann::ordered_json ToJson() const;
  void Validate() const;
  // A short display name such as "rm_plus[discrete,R=1,persist]".
  std::string Label() const;
};

const std::vector<std::string>& AlgorithmNames();

std::unique_ptr<LearningAgent> MakeAgent(const AgentConfig& config);

}  // namespace rrps::learners

#endif  // RRPS_LEARNERS_CONFIG_H_
