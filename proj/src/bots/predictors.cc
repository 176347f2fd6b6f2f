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

#include "rrps/bots/predictors.h"

#include <algorithm>
#include <stdexcept>

namespace rrps::bots {

Channel ParseChannel(const std::string& s) {
  if (s == "own") return Channel::kOwn;
  if (s == "opp") return Channel::kOpp;
  if (s == "joint") return Channel::kJoint;
  throw std::invalid_argument("unknown channel '" + s +
                              "' (expected own, opp or joint)");
}

std::string ChannelName(Channel c) {
  switch (c) {
    case Channel::kOwn:
      return "own";
    case Channel::kOpp:
      return "opp";
    case Channel::kJoint:
      return "joint";
  }
  return "?";
}

int ChannelSymbol(const JointAction& step, Channel c) {
  switch (c) {
    case Channel::kOwn:
      return Index(step.mine);
    case Channel::kOpp:
      return Index(step.theirs);
    case Channel::kJoint:
      return step.index();
  }
  return 0;
}

int ChannelAlphabet(Channel c) {
  return c == Channel::kJoint ? kNumJointActions : kNumActions;
}

ActionDistribution MarkovPredict(std::span<const Action> seq, int order,
                                 double smoothing) {
  if (order < 0) throw std::invalid_argument("markov order must be >= 0");
  if (!(smoothing > 0.0)) {
    throw std::invalid_argument("markov smoothing must be > 0");
  }
  const std::size_t n = seq.size();
  const auto k = static_cast<std::size_t>(order);
  if (n <= k) return ActionDistribution::Uniform();

  const auto context = seq.subspan(n - k, k);
  std::array<double, 3> counts{};
  double total = 0.0;
  for (std::size_t i = k; i < n; ++i) {
    if (std::equal(context.begin(), context.end(), seq.begin() + (i - k))) {
      counts[Index(seq[i])] += 1.0;
      total += 1.0;
    }
  }
  if (total == 0.0) return ActionDistribution::Uniform();
  ActionDistribution d;
  for (int a = 0; a < kNumActions; ++a) {
    d.p[a] = (counts[a] + smoothing) / (total + 3.0 * smoothing);
  }
  return d;
}

MatchResult HistoryMatch(std::span<const JointAction> history, Channel channel,
                         int max_window) {
  if (max_window < 1) throw std::invalid_argument("max_window must be >= 1");
  const int n = static_cast<int>(history.size());
  auto sym = [&](int i) { return ChannelSymbol(history[i], channel); };
  for (int len = std::min(max_window, n - 1); len >= 1; --len) {
    // Candidate earlier occurrences end at e <= n - 2; scan most recent first.
    for (int e = n - 2; e >= len - 1; --e) {
      bool match = true;
      for (int i = 0; i < len && match; ++i) {
        match = sym(e - i) == sym(n - 1 - i);
      }
      if (match) return {history[e + 1], len};
    }
  }
  return {};
}

int SuffixMatcher::MaxSupportedWindow(Channel channel) {
  return channel == Channel::kJoint ? 20 : 40;
}

SuffixMatcher::SuffixMatcher(Channel channel, int max_window)
    : channel_(channel),
      max_window_(max_window),
      base_(ChannelAlphabet(channel)),
      last_end_(std::max(max_window, 0)),
      match_end_(std::max(max_window, 0), -1) {
  if (max_window < 1 || max_window > MaxSupportedWindow(channel)) {
    throw std::invalid_argument(
        "history window out of range for channel " + ChannelName(channel) +
        ": " + std::to_string(max_window));
  }
}

void SuffixMatcher::Clear() {
  symbols_.clear();
  for (auto& m : last_end_) m.clear();
  std::fill(match_end_.begin(), match_end_.end(), -1);
}

void SuffixMatcher::Append(std::span<const JointAction> history) {
  if (history.size() != symbols_.size() + 1) {
    throw std::logic_error("SuffixMatcher::Append out of sync with history");
  }
  symbols_.push_back(ChannelSymbol(history.back(), channel_));
  const int n = static_cast<int>(symbols_.size());
  const int end = n - 1;

  // Key of the length-L suffix: the most recent symbol in the lowest place.
  // Each length has its own table.
  std::uint64_t key = 0;
  std::uint64_t place = 1;
  const int longest = std::min(max_window_, n);
  bool still_matching = true;
  for (int len = 1; len <= max_window_; ++len) {
    if (len > longest) {
      match_end_[len - 1] = -1;
      continue;
    }
    key += place * static_cast<std::uint64_t>(symbols_[end - len + 1]);
    place *= static_cast<std::uint64_t>(base_);
    auto& table = last_end_[len - 1];
    // A length-L suffix can only recur if the length-(L-1) one does.
    if (still_matching) {
      auto it = table.find(key);
      if (it != table.end()) {
        match_end_[len - 1] = it->second;
      } else {
        match_end_[len - 1] = -1;
        still_matching = false;
      }
    } else {
      match_end_[len - 1] = -1;
    }
    table[key] = end;
  }
}

MatchResult SuffixMatcher::Query(std::span<const JointAction> history,
                                 int window) const {
  if (history.size() != symbols_.size()) {
    throw std::logic_error("SuffixMatcher::Query out of sync with history");
  }
  for (int len = std::min(window, max_window_); len >= 1; --len) {
    const int e = match_end_[len - 1];
    if (e >= 0) return {history[e + 1], len};
  }
  return {};
}

MarkovModel::MarkovModel(int order, Channel context_channel, double decay)
    : order_(order),
      channel_(context_channel),
      decay_(decay),
      tables_(std::max(order, 0) + 1) {
  if (order < 0) throw std::invalid_argument("markov order must be >= 0");
  const int max_order = context_channel == Channel::kJoint ? 20 : 40;
  if (order > max_order) {
    throw std::invalid_argument("markov order too large: " +
                                std::to_string(order));
  }
  if (!(decay > 0.0 && decay <= 1.0)) {
    throw std::invalid_argument("markov decay must be in (0, 1]");
  }
}

void MarkovModel::Clear() {
  for (auto& t : tables_) t.clear();
  increment_ = 1.0;
}

std::uint64_t MarkovModel::ContextKey(std::span<const JointAction> history,
                                      std::size_t end, int order) const {
  const auto base = static_cast<std::uint64_t>(ChannelAlphabet(channel_));
  std::uint64_t key = 0;
  for (std::size_t i = end - static_cast<std::size_t>(order); i < end; ++i) {
    key = key * base + static_cast<std::uint64_t>(
                           ChannelSymbol(history[i], channel_));
  }
  return key;
}

void MarkovModel::Append(std::span<const JointAction> history) {
  const std::size_t n = history.size();
  if (n == 0) return;
  const int target = Index(history[n - 1].theirs);
  const std::size_t end = n - 1;  // context is history[end - k, end)
  for (int k = 0; k <= order_ && static_cast<std::size_t>(k) <= end; ++k) {
    tables_[k][ContextKey(history, end, k)][target] += increment_;
  }
  if (decay_ < 1.0) {
    increment_ /= decay_;
    if (increment_ > 1e200) {
      for (auto& t : tables_) {
        for (auto& [key, counts] : t) {
          for (double& c : counts) c *= 1e-200;
        }
      }
      increment_ *= 1e-200;
    }
  }
}

std::optional<std::array<double, 3>> MarkovModel::Counts(
    std::span<const JointAction> history, int order) const {
  if (order < 0 || order > order_ ||
      history.size() < static_cast<std::size_t>(order)) {
    return std::nullopt;
  }
  const auto& table = tables_[order];
  auto it = table.find(ContextKey(history, history.size(), order));
  if (it == table.end()) return std::nullopt;
  return it->second;
}

Action ArgmaxCount(const std::array<double, 3>& counts) {
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (counts[i] > counts[best]) best = i;
  }
  return ActionFromIndex(best);
}

}  // namespace rrps::bots
