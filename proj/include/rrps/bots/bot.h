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

#ifndef RRPS_BOTS_BOT_H_
#define RRPS_BOTS_BOT_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rrps/bots/bot_spec.h"
#include "rrps/bots/predictors.h"
#include "rrps/engine/episode.h"

namespace rrps::bots {

// A fixed population member. Bots are deterministic functions of the
// history they have observed; all of their randomness is in the returned
// distribution.
class Bot : public Agent {
 public:
  explicit Bot(std::string name) : name_(std::move(name)) {}

  std::string_view name() const override { return name_; }
  void Reset() override {}
  void Observe(const History&, int) override {}

 private:
  std::string name_;
};

// Builds one fresh bot from its spec. Throws std::invalid_argument on
// malformed params.
std::unique_ptr<Bot> MakeBot(const BotSpec& spec);

// Switches between sub-policies, playing the one with the highest cumulative
// counterfactual score (expected payoff of its distribution against the
// realized opponent action). Ties go to the lowest index.
class MetaSwitchBot : public Bot {
 public:
  MetaSwitchBot(std::string name, std::vector<std::unique_ptr<Bot>> strategies,
                double decay = 1.0);

  void Reset() override;
  ActionDistribution Act(const History& history) override;
  void Observe(const History& history, int reward) override;

  int current_choice() const;
  const std::vector<double>& scores() const { return scores_; }

 private:
  std::vector<std::unique_ptr<Bot>> strategies_;
  double decay_;
  std::vector<double> scores_;
  std::vector<ActionDistribution> current_;
};

// Predictor / meta-strategy framework. Predictors: a uniform guess,
// frequency counts, and history matching for each window size on the own,
// opponent and joint channels. Each predictor yields a prediction m of the
// opponent's move and a mirrored prediction m' of our own move; the six
// meta-strategies suggest beat(m), m, loses_to(m), beat(m'), m', loses_to(m').
// Every (predictor, meta-strategy) pair keeps a cumulative counterfactual
// score and the best pair is played.
class IocaineBot : public Bot {
 public:
  static constexpr int kNumMetaStrategies = 6;

  IocaineBot(std::string name, std::vector<int> windows, double decay = 1.0);

  void Reset() override;
  ActionDistribution Act(const History& history) override;
  void Observe(const History& history, int reward) override;

  int num_predictors() const { return static_cast<int>(suggestions_.size()) /
                                      kNumMetaStrategies; }
  // Index of the pair that will be played next: predictor * 6 + meta.
  int best_pair() const;
  const std::vector<double>& scores() const { return scores_; }

  static constexpr int kUniformPredictor = 0;
  static constexpr int kFrequencyPredictor = 1;
  // Index of the history-match predictor for `channel` and windows_[w].
  int HistoryPredictorIndex(Channel channel, int window_index) const;

 private:
  void ComputeSuggestions(const History& history);

  std::vector<int> windows_;
  double decay_;
  std::vector<SuffixMatcher> matchers_;  // own, opp, joint
  std::array<int, 3> own_counts_{};
  std::array<int, 3> opp_counts_{};
  std::vector<double> scores_;
  // Suggested action per pair for the current step; nullopt = play uniform.
  std::vector<std::optional<Action>> suggestions_;
};

}  // namespace rrps::bots

#endif  // RRPS_BOTS_BOT_H_
