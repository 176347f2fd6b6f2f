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

#ifndef RRPS_BOTS_PREDICTORS_H_
#define RRPS_BOTS_PREDICTORS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rrps/engine/types.h"

namespace rrps::bots {

// Which sequence of a History a predictor looks at.
enum class Channel { kOwn, kOpp, kJoint };

Channel ParseChannel(const std::string& s);
std::string ChannelName(Channel c);

// Symbol of `step` on channel `c`: an action index (0..2) for own/opp, a
// joint index (0..8) for joint.
int ChannelSymbol(const JointAction& step, Channel c);
int ChannelAlphabet(Channel c);

// Laplace-smoothed order-k Markov estimate of the next element of `seq`:
// counts of what followed earlier occurrences of the last k elements, plus
// `smoothing` per action. Uniform when the context has never been followed
// by anything (including the empty sequence).
ActionDistribution MarkovPredict(std::span<const Action> seq, int order,
                                 double smoothing);

struct MatchResult {
  // The step that followed the most recent earlier occurrence of the
  // matched suffix, if any.
  std::optional<JointAction> next;
  int length = 0;
};

// Longest suffix (length <= max_window) of the chosen channel that also
// occurs earlier in the history; reports what followed its most recent
// earlier occurrence. Reference implementation, O(n * max_window) per call.
MatchResult HistoryMatch(std::span<const JointAction> history, Channel channel,
                         int max_window);

// Incremental equivalent of HistoryMatch for all windows up to `max_window`
// at once, O(max_window) per appended step. Keys are exact base-b packings,
// so max_window is capped at 20 for the joint channel and 40 otherwise.
class SuffixMatcher {
 public:
  SuffixMatcher(Channel channel, int max_window);

  void Clear();
  // Appends the latest step of `history` (which must have grown by one since
  // the previous call).
  void Append(std::span<const JointAction> history);

  // HistoryMatch(history, channel, window) for window <= max_window.
  MatchResult Query(std::span<const JointAction> history, int window) const;

  int max_window() const { return max_window_; }
  static int MaxSupportedWindow(Channel channel);

 private:
  Channel channel_;
  int max_window_;
  int base_;
  std::vector<int> symbols_;
  // last_end_[L-1]: suffix key of length L -> latest end position.
  std::vector<std::unordered_map<std::uint64_t, int>> last_end_;
  // match_end_[L-1]: end position of the most recent earlier occurrence of
  // the current length-L suffix, or -1.
  std::vector<int> match_end_;
};

// Incremental order-k model predicting the opponent's next action from the
// last k symbols of a channel, with exponential forgetting (`decay` = 1
// keeps plain counts).
class MarkovModel {
 public:
  MarkovModel(int order, Channel context_channel, double decay = 1.0);

  void Clear();
  void Append(std::span<const JointAction> history);

  // Weighted counts of the opponent's next action after the current
  // context of length `order` (or shorter, for backoff); nullopt if unseen.
  std::optional<std::array<double, 3>> Counts(
      std::span<const JointAction> history, int order) const;

  int order() const { return order_; }

 private:
  std::uint64_t ContextKey(std::span<const JointAction> history,
                           std::size_t end, int order) const;

  int order_;
  Channel channel_;
  double decay_;
  double increment_ = 1.0;
  // One table per order 0..order_, so that backoff is exact.
  std::vector<std::unordered_map<std::uint64_t, std::array<double, 3>>> tables_;
};

// Lowest-index argmax of a count triple.
Action ArgmaxCount(const std::array<double, 3>& counts);

}  // namespace rrps::bots

#endif  // RRPS_BOTS_PREDICTORS_H_
