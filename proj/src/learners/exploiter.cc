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

#include "rrps/learners/exploiter.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rrps/engine/seeding.h"

namespace rrps::learners {

OmniscientExploiter::OmniscientExploiter(std::unique_ptr<Agent> shadow)
    : shadow_(std::move(shadow)),
      name_("omniscient/" + std::string(shadow_->name())) {}

void OmniscientExploiter::Reset() {
  shadow_->Reset();
  mirrored_.clear();
}

ActionDistribution OmniscientExploiter::Act(const History& history) {
  if (history.size() != mirrored_.size()) {
    throw std::logic_error("omniscient exploiter out of sync with history");
  }
  return ActionDistribution::PointMass(shadow_->Act(mirrored_).BestResponse());
}

void OmniscientExploiter::Observe(const History& history, int reward) {
  mirrored_.push_back(history.back().Swapped());
  shadow_->Observe(mirrored_, -reward);
}

void ExploiterConfig::Validate() const {
  if (recalls.empty()) throw std::invalid_argument("no recall values");
  if (episodes < 1) throw std::invalid_argument("episodes must be >= 1");
  if (num_evaluations < 1 || eval_episodes < 1 || window < 1) {
    throw std::invalid_argument("evaluation counts must be >= 1");
  }
  episode.Validate();
  for (int r : recalls) {
    QConfig q_at = q;
    q_at.recall = r;
    q_at.Validate();
  }
}

double BestWindowMean(const std::vector<double>& values, int window) {
  if (values.empty()) throw std::invalid_argument("no values");
  const std::size_t w = static_cast<std::size_t>(window);
  if (values.size() <= w) {
    return std::accumulate(values.begin(), values.end(), 0.0) / values.size();
  }
  double sum = std::accumulate(values.begin(), values.begin() + w, 0.0);
  double best = sum;
  for (std::size_t i = w; i < values.size(); ++i) {
    sum += values[i] - values[i - w];
    best = std::max(best, sum);
  }
  return best / w;
}

RecallCurve TrainExploiterAtRecall(const AgentFactory& target, int recall,
                                   const ExploiterConfig& config) {
  QConfig q = config.q;
  q.recall = recall;
  q.total_episodes = config.episodes;
  QLearner learner(q);
  std::unique_ptr<Agent> bot = target();

  const std::uint64_t train_seed =
      Mix64(config.seed ^ seed_streams::kExploiterTrain);
  const std::uint64_t eval_seed =
      Mix64(config.seed ^ seed_streams::kExploiterEval);
  const std::int64_t interval =
      std::max<std::int64_t>(1, config.episodes / config.num_evaluations);

  RecallCurve curve;
  curve.recall = recall;
  std::vector<int> recent;
  for (std::int64_t e = 0; e < config.episodes; ++e) {
    const EpisodeResult r = PlayEpisode(
        learner, *bot, config.episode, DeriveEpisodeSeed(train_seed, recall, 0, e));
    recent.push_back(r.return0);
    if ((e + 1) % interval != 0 && e + 1 != config.episodes) continue;
    learner.SetFrozen(true);
    double total = 0.0;
    const std::uint64_t checkpoint = curve.checkpoints.size();
    for (int k = 0; k < config.eval_episodes; ++k) {
      total += PlayEpisode(learner, *bot, config.episode,
                           DeriveEpisodeSeed(eval_seed, recall, checkpoint, k))
                   .return0;
    }
    learner.SetFrozen(false);
    curve.checkpoints.push_back(e + 1);
    curve.eval_means.push_back(total / config.eval_episodes);
  }
  curve.episodes_trained = config.episodes;
  curve.best_window_mean = BestWindowMean(curve.eval_means, config.window);
  const std::size_t tail = std::min<std::size_t>(100, recent.size());
  curve.final_train_mean =
      std::accumulate(recent.end() - tail, recent.end(), 0.0) / tail;
  return curve;
}

ExploiterReport TrainExploiter(const std::string& bot_name,
                               const AgentFactory& target,
                               const ExploiterConfig& config) {
  config.Validate();
  ExploiterReport report;
  report.bot = bot_name;
  for (int r : config.recalls) {
    report.curves.push_back(TrainExploiterAtRecall(target, r, config));
    const RecallCurve& c = report.curves.back();
    if (report.curves.size() == 1 || c.best_window_mean > report.best_mean) {
      report.best_mean = c.best_window_mean;
      report.best_recall = r;
    }
  }
  return report;
}

}  // namespace rrps::learners
