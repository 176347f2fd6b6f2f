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

#ifndef RRPS_PBE_HOLDOUT_H_
#define RRPS_PBE_HOLDOUT_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

#include "rrps/bots/population.h"
#include "rrps/engine/episode.h"

namespace rrps::pbe {

using LearningAgentFactory = std::function<std::unique_ptr<LearningAgent>()>;

struct HoldoutConfig {
  int n_test = 10;
  int folds = 50;
  int train_episodes = 330;  // round-robin over the training bots
  int eval_episodes = 10;    // per bot, agent frozen
  EpisodeConfig episode;
  std::uint64_t seed = 0;
  int workers = 0;

  // Throws std::invalid_argument; needs the population size.
  void Validate(int population_size) const;
};

struct HoldoutFold {
  std::vector<int> train;  // population slots, ascending
  std::vector<int> test;
  double train_mean = 0.0;  // mean over bots of per-bot mean return
  double test_mean = 0.0;
};

struct HoldoutReport {
  std::vector<HoldoutFold> folds;
  double train_mean = 0.0;  // averages over folds
  double test_mean = 0.0;
};

// The test slots of every fold: `n_test` slots drawn without replacement by
// a seeded Fisher-Yates shuffle. Folds may overlap.
std::vector<std::vector<int>> SampleFolds(int population_size, int n_test,
                                          int folds, std::uint64_t seed);

// Trains a fresh agent per fold against the training bots only, freezes
// it, then measures it against both the training and the held-out bots.
// Agents must be persistent (their learning has to survive episode
// boundaries); others are rejected with std::invalid_argument.
HoldoutReport HoldoutEval(const LearningAgentFactory& agent,
                          const bots::Population& pop,
                          const HoldoutConfig& config);

// Columns: fold,train_ids,test_ids,train_mean,test_mean with ids joined by
// spaces.
void WriteHoldoutCsv(std::ostream& os, const HoldoutReport& report,
                     const bots::Population& pop);

}  // namespace rrps::pbe

#endif  // RRPS_PBE_HOLDOUT_H_
