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

#ifndef RRPS_PBE_METRICS_H_
#define RRPS_PBE_METRICS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rrps/bots/population.h"
#include "rrps/engine/episode.h"
#include "rrps/pbe/stats.h"

namespace rrps::pbe {

using AgentFactory = std::function<std::unique_ptr<Agent>()>;

struct MetricsRecord {
  std::string agent;
  Estimate pop_return;
  Estimate wp_expl;
  std::string wp_expl_bot;  // the bot attaining the maximum
  std::optional<double> learned_expl;
  Estimate agg_score;  // mean is exactly pop_return.mean - wp_expl.mean
  int episodes_per_bot = 0;
  // The agent's mean return against each bot, in population order.
  std::vector<double> per_bot;

  nlohmann::ordered_json ToJson() const;
  static MetricsRecord FromJson(const nlohmann::json& j);
};

double AggregateScore(double pop_return, double wp_expl);

// Fills agg_score from pop_return and wp_expl.
void FinishRecord(MetricsRecord& record);

struct EvalConfig {
  int episodes_per_bot = 100;
  EpisodeConfig episode;
  std::uint64_t seed = 0;
  int workers = 0;  // 0 = all hardware threads

  void Validate() const;
};

// PopulationReturn and WithinPopExpl of an agent. Each bot faces a freshly
// built agent for `episodes_per_bot` consecutive episodes with the agent in
// seat 0; a persistent agent therefore carries what it learns across that
// bot's episodes. Episode seeds depend only on (seed, bot slot, episode).
MetricsRecord EvaluateAgent(const std::string& name, const AgentFactory& agent,
                            const bots::Population& pop,
                            const EvalConfig& config);

}  // namespace rrps::pbe

#endif  // RRPS_PBE_METRICS_H_
