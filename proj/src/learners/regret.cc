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

#include "rrps/learners/regret.h"

#include <algorithm>
#include <stdexcept>

namespace rrps::learners {

std::vector<double> RegretMatchingPolicy(std::span<const double> regrets) {
  std::vector<double> policy(regrets.size(), 0.0);
  double total = 0.0;
  for (std::size_t a = 0; a < regrets.size(); ++a) {
    policy[a] = std::max(0.0, regrets[a]);
    total += policy[a];
  }
  if (total > 0.0) {
    for (double& x : policy) x /= total;
  } else {
    std::fill(policy.begin(), policy.end(), 1.0 / regrets.size());
  }
  return policy;
}

void RegretUpdate(std::span<double> regrets, std::span<const double> payoffs,
                  std::span<const double> played, bool plus) {
  if (payoffs.size() != regrets.size() || played.size() != regrets.size()) {
    throw std::invalid_argument("regret update: arm count mismatch");
  }
  double value = 0.0;
  for (std::size_t a = 0; a < regrets.size(); ++a) {
    value += played[a] * payoffs[a];
  }
  for (std::size_t a = 0; a < regrets.size(); ++a) {
    regrets[a] += payoffs[a] - value;
    if (plus) regrets[a] = std::max(0.0, regrets[a]);
  }
}

RegretMatcher::RegretMatcher(int num_arms, bool plus) : plus_(plus) {
  if (num_arms < 1) throw std::invalid_argument("need at least one arm");
  regrets_.assign(num_arms, 0.0);
  policy_ = RegretMatchingPolicy(regrets_);
}

void RegretMatcher::Update(std::span<const double> payoffs) {
  const std::vector<double> played = policy_;
  UpdateWithPlayed(payoffs, played);
}

void RegretMatcher::UpdateWithPlayed(std::span<const double> payoffs,
                                     std::span<const double> played) {
  RegretUpdate(regrets_, payoffs, played, plus_);
  policy_ = RegretMatchingPolicy(regrets_);
}

std::unique_ptr<ArmLearner> RegretMatcher::Fresh() const {
  return std::make_unique<RegretMatcher>(num_arms(), plus_);
}

}  // namespace rrps::learners
