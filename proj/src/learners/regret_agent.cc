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

#include "rrps/learners/regret_agent.h"

#include <stdexcept>

namespace rrps::learners {

ContextMode ParseContextMode(const std::string& s) {
  if (s == "none") return ContextMode::kNone;
  if (s == "discrete") return ContextMode::kDiscrete;
  if (s == "experts") return ContextMode::kExperts;
  throw std::invalid_argument("unknown contexts '" + s +
                              "' (expected none, discrete or experts)");
}

std::string ContextModeName(ContextMode m) {
  switch (m) {
    case ContextMode::kNone:
      return "none";
    case ContextMode::kDiscrete:
      return "discrete";
    case ContextMode::kExperts:
      return "experts";
  }
  return "?";
}

std::array<std::optional<Action>, kNumExpertArms> ExpertSuggestions(
    std::span<const JointAction> history) {
  std::array<std::optional<Action>, kNumExpertArms> arms;
  arms[0] = Action::kRock;
  arms[1] = Action::kPaper;
  arms[2] = Action::kScissors;
  if (!history.empty()) {
    const Action o = history.back().theirs;
    const Action u = history.back().mine;
    arms[3] = o;
    arms[4] = u;
    arms[5] = Beat(o);
    arms[6] = Beat(u);
    arms[7] = LosesTo(o);
    arms[8] = LosesTo(u);
  }
  return arms;
}

RegretAgent::RegretAgent(std::string name,
                         std::unique_ptr<ArmLearner> prototype,
                         ContextMode mode, int recall, bool persist)
    : name_(std::move(name)),
      prototype_(std::move(prototype)),
      mode_(mode),
      recall_(mode == ContextMode::kDiscrete ? recall : 0),
      persist_(persist) {
  if (recall < 0 || recall > kMaxRecall) {
    throw std::invalid_argument("recall out of range");
  }
  const int want = mode == ContextMode::kExperts ? kNumExpertArms : kNumActions;
  if (prototype_->num_arms() != want) {
    throw std::invalid_argument("regret agent: learner has wrong arm count");
  }
}

void RegretAgent::Reset() {
  if (!persist_) learners_.clear();
}

ObservationCode RegretAgent::ContextOf(
    std::span<const JointAction> history) const {
  return recall_ == 0 ? 0 : EncodeObservation(history, recall_);
}

const ArmLearner* RegretAgent::learner(ObservationCode code) const {
  const auto it = learners_.find(code);
  return it == learners_.end() ? nullptr : it->second.get();
}

ActionDistribution RegretAgent::Act(const History& history) {
  const ArmLearner* l = learner(ContextOf(history));
  const std::vector<double>& q = l ? l->Policy() : prototype_->Policy();
  ActionDistribution d;
  if (mode_ != ContextMode::kExperts) {
    for (int a = 0; a < kNumActions; ++a) d.p[a] = q[a];
    return d;
  }
  const auto arms = ExpertSuggestions(history);
  for (int k = 0; k < kNumExpertArms; ++k) {
    if (arms[k]) {
      d[*arms[k]] += q[k];
    } else {
      for (double& x : d.p) x += q[k] / kNumActions;
    }
  }
  return d;
}

void RegretAgent::Observe(const History& history, int) {
  if (frozen_) return;
  const std::span<const JointAction> before(history.data(),
                                            history.size() - 1);
  auto& slot = learners_[ContextOf(before)];
  if (!slot) slot = prototype_->Fresh();
  const Action opp = history.back().theirs;
  if (mode_ != ContextMode::kExperts) {
    std::array<double, kNumActions> u;
    for (Action a : kAllActions) u[Index(a)] = Payoff(a, opp);
    slot->Update(u);
    return;
  }
  // An arm without a suggestion played uniformly, worth 0 in expectation.
  std::array<double, kNumExpertArms> u{};
  const auto arms = ExpertSuggestions(before);
  for (int k = 0; k < kNumExpertArms; ++k) {
    u[k] = arms[k] ? Payoff(*arms[k], opp) : 0.0;
  }
  slot->Update(u);
}

}  // namespace rrps::learners
