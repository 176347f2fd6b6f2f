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

// Seed bots and the predictor archetypes that stand in for entrant bots.

#include "rrps/bots/simple_bots.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rrps::bots {

ActionDistribution SequenceBot::Act(const History& history) {
  return ActionDistribution::PointMass(
      sequence_[history.size() % sequence_.size()]);
}

ActionDistribution CopyBot::Act(const History& history) {
  if (history.empty()) return ActionDistribution::Uniform();
  return ActionDistribution::PointMass(Beat(history.back().theirs));
}

ActionDistribution SwitchBot::Act(const History& history) {
  if (history.empty()) return ActionDistribution::Uniform();
  const Action last = history.back().mine;
  const double other = (1.0 - repeat_prob_) / 2.0;
  ActionDistribution d;
  for (Action a : kAllActions) d[a] = a == last ? repeat_prob_ : other;
  return d;
}

ActionDistribution FoxtrotBot::Act(const History& history) {
  const std::size_t t = history.size();
  if (t % 2 == 0 || history.empty()) return ActionDistribution::Uniform();
  return ActionDistribution::PointMass(
      ActionFromIndex((Index(history.back().mine) + offset_) % 3));
}

// DriftBot ------------------------------------------------------------------

DriftBot::DriftBot(std::string name, Channel context, double drift)
    : Bot(std::move(name)), context_(context), drift_(drift) {
  if (context != Channel::kOpp && context != Channel::kJoint) {
    throw std::invalid_argument("drift bots use the opp or joint context");
  }
  if (!(drift >= 0.0)) throw std::invalid_argument("drift must be >= 0");
  Reset();
}

int DriftBot::ContextOf(const History& history) const {
  if (history.empty()) return 0;
  return 1 + ChannelSymbol(history.back(), context_);
}

void DriftBot::Reset() {
  bias_.assign(1 + ChannelAlphabet(context_), ActionDistribution::Uniform());
}

ActionDistribution DriftBot::Act(const History& history) {
  return bias_[ContextOf(history)];
}

void DriftBot::Observe(const History& history, int) {
  // Context the step was played in.
  const History::size_type n = history.size();
  const int c =
      n >= 2 ? 1 + ChannelSymbol(history[n - 2], context_) : 0;
  ActionDistribution& b = bias_[c];
  b[Beat(history.back().theirs)] += drift_;
  const double total = b.p[0] + b.p[1] + b.p[2];
  for (double& x : b.p) x /= total;
}

// AddShiftBot ---------------------------------------------------------------

void AddShiftBot::Reset() { shift_.fill(0); }

ActionDistribution AddShiftBot::Act(const History& history) {
  if (history.empty()) return ActionDistribution::Uniform();
  const JointAction& last = history.back();
  const Action target = ActionFromIndex(
      (Index(last.theirs) + 1 + shift_[last.index()]) % 3);
  ActionDistribution d;
  for (Action a : kAllActions) d[a] = (1.0 - bias_) / 2.0;
  d[target] = bias_;
  return d;
}

void AddShiftBot::Observe(const History& history, int reward) {
  const History::size_type n = history.size();
  if (n >= 2 && reward < 0) {
    int& s = shift_[history[n - 2].index()];
    s = (s + 1) % 3;
  }
}

// Frequency-driven seed bots ------------------------------------------------

namespace {

// Lowest-index least frequent action.
Action LeastFrequent(const std::array<int, 3>& counts) {
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (counts[i] < counts[best]) best = i;
  }
  return ActionFromIndex(best);
}

Action MostFrequent(const std::array<int, 3>& counts) {
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (counts[i] > counts[best]) best = i;
  }
  return ActionFromIndex(best);
}

}  // namespace

void FlatBot::Reset() { counts_.fill(0); }
ActionDistribution FlatBot::Act(const History&) {
  return ActionDistribution::PointMass(LeastFrequent(counts_));
}
void FlatBot::Observe(const History& history, int) {
  ++counts_[Index(history.back().mine)];
}

void AntiFlatBot::Reset() { opp_counts_.fill(0); }
ActionDistribution AntiFlatBot::Act(const History&) {
  return ActionDistribution::PointMass(Beat(LeastFrequent(opp_counts_)));
}
void AntiFlatBot::Observe(const History& history, int) {
  ++opp_counts_[Index(history.back().theirs)];
}

void FreqBot::Reset() { opp_counts_.fill(0); }
ActionDistribution FreqBot::Act(const History&) {
  return ActionDistribution::PointMass(Beat(MostFrequent(opp_counts_)));
}
void FreqBot::Observe(const History& history, int) {
  ++opp_counts_[Index(history.back().theirs)];
}

ActionDistribution AntiRotnBot::Act(const History& history) {
  const std::size_t n = history.size();
  if (n < 2) return ActionDistribution::Uniform();
  // Increments between consecutive opponent moves among the last `window_`.
  std::array<int, 3> increments{};
  const std::size_t w = static_cast<std::size_t>(window_);
  for (std::size_t i = n > w ? n - w : 1; i < n; ++i) {
    const int delta =
        (Index(history[i].theirs) - Index(history[i - 1].theirs) + 3) % 3;
    ++increments[delta];
  }
  const int delta = Index(MostFrequent(increments));
  const Action predicted =
      ActionFromIndex((Index(history.back().theirs) + delta) % 3);
  return ActionDistribution::PointMass(Beat(predicted));
}

// CountPredictorBot ---------------------------------------------------------

CountPredictorBot::CountPredictorBot(std::string name,
                                     std::vector<double> decays, int level,
                                     double noise)
    : Bot(std::move(name)),
      decays_(std::move(decays)),
      level_(level),
      noise_(noise) {
  if (decays_.empty()) throw std::invalid_argument("decays must be nonempty");
  for (double d : decays_) {
    if (!(d > 0.0 && d <= 1.0)) {
      throw std::invalid_argument("count decay must be in (0, 1]");
    }
  }
  if (level != 0 && level != 1) {
    throw std::invalid_argument("count-predictor level must be 0 or 1");
  }
  if (!(noise >= 0.0 && noise <= 1.0)) {
    throw std::invalid_argument("noise must be in [0, 1]");
  }
  Reset();
}

void CountPredictorBot::Reset() {
  counts_.assign(decays_.size(), {0.0, 0.0, 0.0});
  steps_ = 0;
}

ActionDistribution CountPredictorBot::Act(const History&) {
  if (steps_ == 0) return ActionDistribution::Uniform();
  // Each decay rate votes for its argmax; ties between votes go to the
  // lowest action.
  std::array<int, 3> votes{};
  for (const auto& c : counts_) ++votes[Index(ArgmaxCount(c))];
  const Action tracked = MostFrequent(votes);
  // Level 0 tracks the opponent's moves and counters the favourite. Level 1
  // tracks our own moves, assumes the opponent counters our favourite, and
  // counters that.
  const Action predicted_opp = level_ == 0 ? tracked : Beat(tracked);
  return ActionDistribution::Blend(Beat(predicted_opp), noise_);
}

void CountPredictorBot::Observe(const History& history, int) {
  const JointAction& last = history.back();
  const int tracked = Index(level_ == 0 ? last.theirs : last.mine);
  for (std::size_t i = 0; i < decays_.size(); ++i) {
    for (double& x : counts_[i]) x *= decays_[i];
    counts_[i][tracked] += 1.0;
  }
  ++steps_;
}

// MarkovBot -----------------------------------------------------------------

MarkovBot::MarkovBot(std::string name, int order, Channel context,
                     double decay, bool backoff, double noise, bool bail)
    : Bot(std::move(name)),
      model_(order, context, decay),
      backoff_(backoff),
      noise_(noise),
      bail_(bail) {
  if (context == Channel::kOwn) {
    throw std::invalid_argument("markov-predictor context is opp or joint");
  }
  if (!(noise >= 0.0 && noise <= 1.0)) {
    throw std::invalid_argument("noise must be in [0, 1]");
  }
}

void MarkovBot::Reset() {
  model_.Clear();
  score_ = 0;
}

ActionDistribution MarkovBot::Act(const History& history) {
  if (bail_ && score_ < 0) return ActionDistribution::Uniform();
  const int lowest = backoff_ ? 0 : model_.order();
  for (int k = model_.order(); k >= lowest; --k) {
    if (auto counts = model_.Counts(history, k)) {
      return ActionDistribution::Blend(Beat(ArgmaxCount(*counts)), noise_);
    }
  }
  return ActionDistribution::Uniform();
}

void MarkovBot::Observe(const History& history, int reward) {
  model_.Append(history);
  score_ += reward;
}

// HistoryMatcherBot ---------------------------------------------------------

HistoryMatcherBot::HistoryMatcherBot(std::string name, int max_window,
                                     Channel channel, double noise)
    : Bot(std::move(name)), matcher_(channel, max_window), noise_(noise) {
  if (!(noise >= 0.0 && noise <= 1.0)) {
    throw std::invalid_argument("noise must be in [0, 1]");
  }
}

void HistoryMatcherBot::Reset() { matcher_.Clear(); }

ActionDistribution HistoryMatcherBot::Act(const History& history) {
  const MatchResult m = matcher_.Query(history, matcher_.max_window());
  if (!m.next) return ActionDistribution::Uniform();
  return ActionDistribution::Blend(Beat(m.next->theirs), noise_);
}

void HistoryMatcherBot::Observe(const History& history, int) {
  matcher_.Append(history);
}

}  // namespace rrps::bots
