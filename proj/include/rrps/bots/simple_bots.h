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

#ifndef RRPS_BOTS_SIMPLE_BOTS_H_
#define RRPS_BOTS_SIMPLE_BOTS_H_

#include <array>
#include <string>
#include <vector>

#include "rrps/bots/bot.h"
#include "rrps/bots/predictors.h"

namespace rrps::bots {

// Plays the same distribution every step (rockbot, randbot, r226bot).
class FixedMixBot : public Bot {
 public:
  FixedMixBot(std::string name, ActionDistribution dist)
      : Bot(std::move(name)), dist_(dist) {}
  ActionDistribution Act(const History&) override { return dist_; }

 private:
  ActionDistribution dist_;
};

// Cycles through a fixed action sequence, ignoring the opponent.
class SequenceBot : public Bot {
 public:
  SequenceBot(std::string name, std::vector<Action> sequence)
      : Bot(std::move(name)), sequence_(std::move(sequence)) {}
  ActionDistribution Act(const History& history) override;

 private:
  std::vector<Action> sequence_;
};

// Plays beat(opponent's previous action); uniform at step 0.
class CopyBot : public Bot {
 public:
  using Bot::Bot;
  ActionDistribution Act(const History& history) override;
};

// Repeats its previous action with `repeat_prob`, otherwise picks one of the
// other two uniformly (switchbot: 0, switchalot: 0.12); uniform at step 0.
class SwitchBot : public Bot {
 public:
  SwitchBot(std::string name, double repeat_prob)
      : Bot(std::move(name)), repeat_prob_(repeat_prob) {}
  ActionDistribution Act(const History& history) override;

 private:
  double repeat_prob_;
};

// Uniform on even steps; own previous action shifted by `offset` on odd
// steps.
class FoxtrotBot : public Bot {
 public:
  FoxtrotBot(std::string name, int offset)
      : Bot(std::move(name)), offset_(((offset % 3) + 3) % 3) {}
  ActionDistribution Act(const History& history) override;

 private:
  int offset_;
};

// Keeps one bias distribution per context (the opponent's last action, or
// the last joint action) starting uniform. After each step, the action that
// would have won gains `drift` mass in the context it was played in, then
// the distribution is renormalized.
class DriftBot : public Bot {
 public:
  DriftBot(std::string name, Channel context, double drift);
  void Reset() override;
  ActionDistribution Act(const History& history) override;
  void Observe(const History& history, int reward) override;

 private:
  int ContextOf(const History& history) const;

  Channel context_;
  double drift_;
  std::vector<ActionDistribution> bias_;  // [0] = no history yet
};

// Puts `bias` mass on (opponent's last + 1 + shift[last joint]) and splits
// the rest; a loss in a context advances that context's shift.
class AddShiftBot : public Bot {
 public:
  AddShiftBot(std::string name, double bias)
      : Bot(std::move(name)), bias_(bias) {}
  void Reset() override;
  ActionDistribution Act(const History& history) override;
  void Observe(const History& history, int reward) override;

 private:
  double bias_;
  std::array<int, kNumJointActions> shift_{};
};

// Point mass on its own least frequent action so far.
class FlatBot : public Bot {
 public:
  using Bot::Bot;
  void Reset() override;
  ActionDistribution Act(const History&) override;
  void Observe(const History& history, int) override;

 private:
  std::array<int, 3> counts_{};
};

// Runs the FlatBot rule on the opponent's moves and beats the prediction.
class AntiFlatBot : public Bot {
 public:
  using Bot::Bot;
  void Reset() override;
  ActionDistribution Act(const History&) override;
  void Observe(const History& history, int) override;

 private:
  std::array<int, 3> opp_counts_{};
};

// Beats the opponent's most frequent action.
class FreqBot : public Bot {
 public:
  using Bot::Bot;
  void Reset() override;
  ActionDistribution Act(const History&) override;
  void Observe(const History& history, int) override;

 private:
  std::array<int, 3> opp_counts_{};
};

// Finds the opponent's most frequent increment over its last `window`
// moves and beats (last + increment); uniform until two moves are seen.
class AntiRotnBot : public Bot {
 public:
  AntiRotnBot(std::string name, int window)
      : Bot(std::move(name)), window_(window) {}
  ActionDistribution Act(const History& history) override;

 private:
  int window_;
};

// Predicts from exponentially decayed action counts. With several decay
// rates each one votes. Level 0 counts the opponent's moves; level 1 counts
// our own and assumes the opponent plays to beat our favourite.
class CountPredictorBot : public Bot {
 public:
  CountPredictorBot(std::string name, std::vector<double> decays, int level,
                    double noise);
  void Reset() override;
  ActionDistribution Act(const History&) override;
  void Observe(const History& history, int) override;

 private:
  std::vector<double> decays_;
  int level_;
  double noise_;
  std::vector<std::array<double, 3>> counts_;
  int steps_ = 0;
};

// Order-k Markov prediction of the opponent's next move, optionally backing
// off to shorter contexts and bailing out to uniform play while behind.
class MarkovBot : public Bot {
 public:
  MarkovBot(std::string name, int order, Channel context, double decay,
            bool backoff, double noise, bool bail);
  void Reset() override;
  ActionDistribution Act(const History& history) override;
  void Observe(const History& history, int reward) override;

 private:
  MarkovModel model_;
  bool backoff_;
  double noise_;
  bool bail_;
  int score_ = 0;
};

// Beats whatever the opponent played after the longest recurring suffix.
class HistoryMatcherBot : public Bot {
 public:
  HistoryMatcherBot(std::string name, int max_window, Channel channel,
                    double noise);
  void Reset() override;
  ActionDistribution Act(const History& history) override;
  void Observe(const History& history, int) override;

 private:
  SuffixMatcher matcher_;
  double noise_;
};

}  // namespace rrps::bots

#endif  // RRPS_BOTS_SIMPLE_BOTS_H_
