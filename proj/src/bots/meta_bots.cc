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

#include <algorithm>
#include <stdexcept>

#include "rrps/bots/bot.h"

namespace rrps::bots {

// MetaSwitchBot -------------------------------------------------------------

MetaSwitchBot::MetaSwitchBot(std::string name,
                             std::vector<std::unique_ptr<Bot>> strategies,
                             double decay)
    : Bot(std::move(name)), strategies_(std::move(strategies)), decay_(decay) {
  if (strategies_.empty()) {
    throw std::invalid_argument("meta-switcher needs at least one strategy");
  }
  if (!(decay > 0.0 && decay <= 1.0)) {
    throw std::invalid_argument("meta-switcher decay must be in (0, 1]");
  }
  Reset();
}

void MetaSwitchBot::Reset() {
  scores_.assign(strategies_.size(), 0.0);
  current_.clear();
  const History empty;
  for (auto& s : strategies_) {
    s->Reset();
    current_.push_back(s->Act(empty));
  }
}

int MetaSwitchBot::current_choice() const {
  return static_cast<int>(std::max_element(scores_.begin(), scores_.end()) -
                          scores_.begin());
}

ActionDistribution MetaSwitchBot::Act(const History&) {
  return current_[current_choice()];
}

void MetaSwitchBot::Observe(const History& history, int reward) {
  const Action opp = history.back().theirs;
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    double ev = 0.0;
    for (Action a : kAllActions) ev += current_[i][a] * Payoff(a, opp);
    scores_[i] = decay_ * scores_[i] + ev;
    strategies_[i]->Observe(history, reward);
    current_[i] = strategies_[i]->Act(history);
  }
}

// IocaineBot ----------------------------------------------------------------

namespace {
constexpr std::array<Channel, 3> kMatchChannels = {Channel::kOwn,
                                                   Channel::kOpp,
                                                   Channel::kJoint};

Action MostFrequent(const std::array<int, 3>& counts) {
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (counts[i] > counts[best]) best = i;
  }
  return ActionFromIndex(best);
}
}  // namespace

IocaineBot::IocaineBot(std::string name, std::vector<int> windows,
                       double decay)
    : Bot(std::move(name)), windows_(std::move(windows)), decay_(decay) {
  if (windows_.empty()) {
    throw std::invalid_argument("iocaine needs at least one window");
  }
  if (!(decay > 0.0 && decay <= 1.0)) {
    throw std::invalid_argument("iocaine decay must be in (0, 1]");
  }
  const int widest = *std::max_element(windows_.begin(), windows_.end());
  for (int w : windows_) {
    if (w < 1) throw std::invalid_argument("iocaine windows must be >= 1");
  }
  for (Channel c : kMatchChannels) matchers_.emplace_back(c, widest);
  const int num_predictors = 2 + 3 * static_cast<int>(windows_.size());
  scores_.assign(num_predictors * kNumMetaStrategies, 0.0);
  suggestions_.assign(scores_.size(), std::nullopt);
  Reset();
}

int IocaineBot::HistoryPredictorIndex(Channel channel,
                                      int window_index) const {
  const int c = channel == Channel::kOwn ? 0 : (channel == Channel::kOpp ? 1
                                                                          : 2);
  return 2 + c * static_cast<int>(windows_.size()) + window_index;
}

void IocaineBot::Reset() {
  for (auto& m : matchers_) m.Clear();
  own_counts_.fill(0);
  opp_counts_.fill(0);
  std::fill(scores_.begin(), scores_.end(), 0.0);
  ComputeSuggestions(History{});
}

void IocaineBot::ComputeSuggestions(const History& history) {
  auto set_pair = [&](int predictor, std::optional<Action> opp_prediction,
                      std::optional<Action> own_prediction) {
    std::optional<Action>* s = &suggestions_[predictor * kNumMetaStrategies];
    if (opp_prediction) {
      s[0] = Beat(*opp_prediction);
      s[1] = *opp_prediction;
      s[2] = LosesTo(*opp_prediction);
    } else {
      s[0] = s[1] = s[2] = std::nullopt;
    }
    if (own_prediction) {
      s[3] = Beat(*own_prediction);
      s[4] = *own_prediction;
      s[5] = LosesTo(*own_prediction);
    } else {
      s[3] = s[4] = s[5] = std::nullopt;
    }
  };

  set_pair(kUniformPredictor, std::nullopt, std::nullopt);
  if (history.empty()) {
    set_pair(kFrequencyPredictor, std::nullopt, std::nullopt);
  } else {
    set_pair(kFrequencyPredictor, MostFrequent(opp_counts_),
             MostFrequent(own_counts_));
  }
  for (std::size_t c = 0; c < kMatchChannels.size(); ++c) {
    for (std::size_t w = 0; w < windows_.size(); ++w) {
      const MatchResult m = matchers_[c].Query(history, windows_[w]);
      const int predictor =
          HistoryPredictorIndex(kMatchChannels[c], static_cast<int>(w));
      if (m.next) {
        set_pair(predictor, m.next->theirs, m.next->mine);
      } else {
        set_pair(predictor, std::nullopt, std::nullopt);
      }
    }
  }
}

int IocaineBot::best_pair() const {
  return static_cast<int>(std::max_element(scores_.begin(), scores_.end()) -
                          scores_.begin());
}

ActionDistribution IocaineBot::Act(const History&) {
  const std::optional<Action>& s = suggestions_[best_pair()];
  return s ? ActionDistribution::PointMass(*s) : ActionDistribution::Uniform();
}

void IocaineBot::Observe(const History& history, int) {
  const JointAction& last = history.back();
  for (std::size_t i = 0; i < scores_.size(); ++i) {
    const double gain =
        suggestions_[i] ? Payoff(*suggestions_[i], last.theirs) : 0.0;
    scores_[i] = decay_ * scores_[i] + gain;
  }
  ++own_counts_[Index(last.mine)];
  ++opp_counts_[Index(last.theirs)];
  for (auto& m : matchers_) m.Append(history);
  ComputeSuggestions(history);
}

}  // namespace rrps::bots
