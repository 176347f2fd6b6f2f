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

#include "rrps/learners/qlearning.h"

#include <algorithm>
#include <stdexcept>

namespace rrps::learners {

double EpsilonSchedule::At(std::int64_t episode,
                           std::int64_t total_episodes) const {
  const double span = fraction * static_cast<double>(total_episodes);
  if (span <= 0.0) return end;
  const double frac = static_cast<double>(episode) / span;
  return frac >= 1.0 ? end : start + (end - start) * frac;
}

std::uint64_t QLearner::TableBytes(int recall) {
  return 3 * ObservationSpaceSize(recall) * sizeof(double);
}

void QConfig::Validate() const {
  if (recall < 0 || recall > kMaxRecall) {
    throw std::invalid_argument("recall must be in [0, " +
                                std::to_string(kMaxRecall) + "]");
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must be in (0, 1]");
  }
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("gamma must be in [0, 1)");
  }
  for (double e : {epsilon.start, epsilon.end}) {
    if (!(e >= 0.0 && e <= 1.0)) {
      throw std::invalid_argument("epsilon must be in [0, 1]");
    }
  }
  if (!(epsilon.fraction >= 0.0 && epsilon.fraction <= 1.0)) {
    throw std::invalid_argument("epsilon fraction must be in [0, 1]");
  }
  if (!allow_large_table && QLearner::TableBytes(recall) > kQTableByteLimit) {
    throw std::invalid_argument(
        "Q-table for recall " + std::to_string(recall) + " needs " +
        std::to_string(QLearner::TableBytes(recall)) +
        " bytes; pass allow_large_table to override");
  }
}

QLearner::QLearner(const QConfig& config, std::string name)
    : config_(config), name_(std::move(name)) {
  config_.Validate();
  table_.assign(3 * ObservationSpaceSize(config_.recall), 0.0);
}

void QLearner::Reset() {
  if (!frozen_) ++episodes_;
}

double QLearner::epsilon() const {
  if (frozen_) return 0.0;
  return config_.epsilon.At(std::max<std::int64_t>(0, episodes_ - 1),
                            config_.total_episodes);
}

Action QLearner::Greedy(ObservationCode s) const {
  const double* row = &table_[3 * s];
  int best = 0;
  for (int a = 1; a < 3; ++a) {
    if (row[a] > row[best]) best = a;
  }
  return ActionFromIndex(best);
}

ActionDistribution QLearner::Act(const History& history) {
  const Action greedy = Greedy(EncodeObservation(history, config_.recall));
  return ActionDistribution::Blend(greedy, epsilon());
}

void QLearner::Observe(const History& history, int reward) {
  if (frozen_) return;
  const std::span<const JointAction> before(history.data(),
                                            history.size() - 1);
  const ObservationCode s = EncodeObservation(before, config_.recall);
  const ObservationCode next = EncodeObservation(history, config_.recall);
  const double* next_row = &table_[3 * next];
  const double target =
      reward + config_.gamma * *std::max_element(next_row, next_row + 3);
  double& cell = table_[3 * s + Index(history.back().mine)];
  cell += config_.alpha * (target - cell);
}

}  // namespace rrps::learners
