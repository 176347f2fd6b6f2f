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

#include "rrps/engine/episode.h"

#include <random>
#include <sstream>

#include "rrps/engine/seeding.h"

namespace rrps {

void EpisodeConfig::Validate() const {
  if (num_steps < 1) {
    throw std::invalid_argument("episode length K must be >= 1, got " +
                                std::to_string(num_steps));
  }
  if (recall < 0) {
    throw std::invalid_argument("recall must be >= 0, got " +
                                std::to_string(recall));
  }
}

namespace {

std::string DescribeInvalid(const std::string& source, int step,
                            const ActionDistribution& d) {
  std::ostringstream os;
  os.precision(17);
  os << "agent '" << source << "' returned an invalid distribution at step "
     << step << ": (" << d.p[0] << ", " << d.p[1] << ", " << d.p[2] << ")";
  return os.str();
}

ActionDistribution CheckedAct(Agent& agent, const History& history) {
  ActionDistribution d = agent.Act(history);
  if (!d.IsValid()) {
    throw InvalidPolicyError(std::string(agent.name()),
                             static_cast<int>(history.size()), d);
  }
  return d;
}

}  // namespace

InvalidPolicyError::InvalidPolicyError(std::string source, int step,
                                       const ActionDistribution& dist)
    : std::runtime_error(DescribeInvalid(source, step, dist)),
      source_(std::move(source)),
      step_(step) {}

Action SampleAction(const ActionDistribution& dist, double u) {
  double cumulative = 0.0;
  for (int i = 0; i < kNumActions - 1; ++i) {
    cumulative += dist.p[i];
    if (u < cumulative) return ActionFromIndex(i);
  }
  // Guard against rounding in the cumulative sum: never pick a zero-mass
  // action.
  for (int i = kNumActions - 1; i >= 0; --i) {
    if (dist.p[i] > 0.0) return ActionFromIndex(i);
  }
  return Action::kScissors;
}

EpisodeResult PlayEpisode(Agent& p0, Agent& p1, const EpisodeConfig& config,
                          std::uint64_t seed) {
  config.Validate();
  std::mt19937_64 gen(seed);
  p0.Reset();
  p1.Reset();

  EpisodeResult result;
  const auto k = static_cast<std::size_t>(config.num_steps);
  History h0, h1;
  h0.reserve(k);
  h1.reserve(k);
  result.rewards0.reserve(k);

  for (std::size_t t = 0; t < k; ++t) {
    const ActionDistribution d0 = CheckedAct(p0, h0);
    const ActionDistribution d1 = CheckedAct(p1, h1);
    const Action a0 = SampleAction(d0, UniformUnit(gen));
    const Action a1 = SampleAction(d1, UniformUnit(gen));
    const Rewards r = JointPayoff(a0, a1);
    h0.push_back({a0, a1});
    h1.push_back({a1, a0});
    result.rewards0.push_back(r.r0);
    result.return0 += r.r0;
    p0.Observe(h0, r.r0);
    p1.Observe(h1, r.r1);
  }
  result.actions = std::move(h0);
  return result;
}

int ReplayReturn(std::string_view actions0, std::string_view actions1) {
  if (actions0.size() != actions1.size()) {
    throw std::invalid_argument("action strings differ in length");
  }
  int total = 0;
  for (std::size_t i = 0; i < actions0.size(); ++i) {
    const auto a0 = ParseAction(actions0[i]);
    const auto a1 = ParseAction(actions1[i]);
    if (!a0 || !a1) {
      throw std::invalid_argument("invalid action character at position " +
                                  std::to_string(i));
    }
    total += Payoff(*a0, *a1);
  }
  return total;
}

std::string ActionString(const History& history, bool mine) {
  std::string s;
  s.reserve(history.size());
  for (const JointAction& j : history) {
    s.push_back(ActionChar(mine ? j.mine : j.theirs));
  }
  return s;
}

}  // namespace rrps
