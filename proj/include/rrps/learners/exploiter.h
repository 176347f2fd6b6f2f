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

#ifndef RRPS_LEARNERS_EXPLOITER_H_
#define RRPS_LEARNERS_EXPLOITER_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rrps/engine/episode.h"
#include "rrps/learners/qlearning.h"

namespace rrps::learners {

// Best-responds to a bot by running a private copy of it on the mirrored
// history and beating the distribution that copy is about to play (lowest
// index on ties). Exact per step; an exact episode best response whenever
// the target's play does not depend on ours.
class OmniscientExploiter : public Agent {
 public:
  explicit OmniscientExploiter(std::unique_ptr<Agent> shadow);

  std::string_view name() const override { return name_; }
  void Reset() override;
  ActionDistribution Act(const History& history) override;
  void Observe(const History& history, int reward) override;

 private:
  std::unique_ptr<Agent> shadow_;
  std::string name_;
  History mirrored_;
};

using AgentFactory = std::function<std::unique_ptr<Agent>()>;

struct ExploiterConfig {
  std::vector<int> recalls = {1, 3, 5};
  std::int64_t episodes = 20000;  // training episodes per recall
  int num_evaluations = 100;      // greedy checkpoints spread over training
  int eval_episodes = 10;         // episodes per checkpoint
  int window = 50;                // sliding window over checkpoints
  QConfig q;                      // recall and total_episodes are overridden
  EpisodeConfig episode;
  std::uint64_t seed = 0;

  void Validate() const;
};

struct RecallCurve {
  int recall = 0;
  std::int64_t episodes_trained = 0;
  std::vector<std::int64_t> checkpoints;  // training episodes completed
  std::vector<double> eval_means;         // greedy mean return per checkpoint
  double best_window_mean = 0.0;
  double final_train_mean = 0.0;  // mean return of the last 100 episodes
};

struct ExploiterReport {
  std::string bot;
  double best_mean = 0.0;  // max over recalls of best_window_mean
  int best_recall = 0;
  std::vector<RecallCurve> curves;
};

// Max over full windows of `window` consecutive values of their mean; the
// mean of everything when fewer values exist.
double BestWindowMean(const std::vector<double>& values, int window);

// Trains one Q-learner per recall against fresh instances of the target
// and reports the best greedy sliding-window mean.
ExploiterReport TrainExploiter(const std::string& bot_name,
                               const AgentFactory& target,
                               const ExploiterConfig& config);

// Trains one recall. Exposed for tests and progress reporting.
RecallCurve TrainExploiterAtRecall(const AgentFactory& target, int recall,
                                   const ExploiterConfig& config);

}  // namespace rrps::learners

#endif  // RRPS_LEARNERS_EXPLOITER_H_
