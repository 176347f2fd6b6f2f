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

#ifndef RRPS_LEARNERS_SWAP_H_
#define RRPS_LEARNERS_SWAP_H_

#include <memory>
#include <vector>

#include "rrps/learners/regret.h"

namespace rrps::learners {

// Stationary distribution p = pQ of the row-stochastic matrix whose rows
// are `rows`. Solved directly when the stationary distribution is unique;
// otherwise the limit of lazy power iteration p <- p(I + Q)/2 from uniform.
std::vector<double> StationaryDistribution(
    const std::vector<std::vector<double>>& rows);

// max_j |(pQ)_j - p_j|.
double StationaryResidual(const std::vector<std::vector<double>>& rows,
                          const std::vector<double>& p);

// Swap-regret reduction (Blum and Mansour): one external-regret learner per
// arm, combined through the stationary distribution of their policies.
// Sub-learner i is fed p[i] * u.
class SwapRegret : public ArmLearner {
 public:
  explicit SwapRegret(int num_arms, std::unique_ptr<ArmLearner> base = nullptr);

  int num_arms() const override { return num_arms_; }
  const std::vector<double>& Policy() const override { return policy_; }
  void Update(std::span<const double> payoffs) override;
  std::unique_ptr<ArmLearner> Fresh() const override;

  std::vector<std::vector<double>> Rows() const;
  // Stationarity residual of the current policy.
  double residual() const { return residual_; }

 private:
  void Combine();

  int num_arms_;
  std::unique_ptr<ArmLearner> prototype_;
  std::vector<std::unique_ptr<ArmLearner>> subs_;
  std::vector<double> policy_;
  double residual_ = 0.0;
};

}  // namespace rrps::learners

#endif  // RRPS_LEARNERS_SWAP_H_
