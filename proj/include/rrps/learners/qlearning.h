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

#ifndef RRPS_LEARNERS_QLEARNING_H_
#define RRPS_LEARNERS_QLEARNING_H_

#include <cstdint>
#include <string>
#include <vector>

#include "rrps/engine/episode.h"
#include "rrps/engine/observation.h"

namespace rrps::learners {

// Linear decay from `start` to `end` over the first `fraction` of
// `total_episodes`, constant afterwards.
struct EpsilonSchedule {
  double start = 0.2;
  double end = 0.01;
  double fraction = 0.1;

  double At(std::int64_t episode, std::int64_t total_episodes) const;
};

struct QConfig {
  int recall = 1;
  double alpha = 0.02;
  double gamma = 0.9;
  EpsilonSchedule epsilon;
  std::int64_t total_episodes = 1000;  // drives the epsilon schedule
  // Tables above kQTableByteLimit are refused unless this is set.
  bool allow_large_table = false;

  void Validate() const;
};

inline constexpr std::uint64_t kQTableByteLimit = std::uint64_t{1} << 30;

// Tabular Q-learning over recall-R observation codes. The table persists
// across episodes; each Reset() advances the epsilon schedule by one
// episode. The episode cap is treated as a time limit, so the last step
// still bootstraps from its successor. Frozen: greedy and no updates.
class QLearner : public LearningAgent {
 public:
  explicit QLearner(const QConfig& config, std::string name = "qlearn");

  std::string_view name() const override { return name_; }
  void Reset() override;
  ActionDistribution Act(const History& history) override;
  void Observe(const History& history, int reward) override;

  void SetFrozen(bool frozen) override { frozen_ = frozen; }
  bool frozen() const override { return frozen_; }
  bool persistent() const override { return true; }

  double q(ObservationCode s, Action a) const {
    return table_[3 * s + Index(a)];
  }
  double epsilon() const;
  // Episodes started so far (Reset() calls while not frozen).
  std::int64_t episodes_started() const { return episodes_; }
  const QConfig& config() const { return config_; }

  static std::uint64_t TableBytes(int recall);

 private:
  Action Greedy(ObservationCode s) const;

  QConfig config_;
  std::string name_;
  std::vector<double> table_;
  std::int64_t episodes_ = 0;
  bool frozen_ = false;
};

}  // namespace rrps::learners

#endif  // RRPS_LEARNERS_QLEARNING_H_
