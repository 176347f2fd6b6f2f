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

#ifndef RRPS_LEARNERS_SAOL_H_
#define RRPS_LEARNERS_SAOL_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "rrps/learners/regret.h"

namespace rrps::learners {

// Strongly adaptive online learner. Time is 1-indexed; for every k >= 0 and
// i >= 1 the interval [i * 2^k, (i + 1) * 2^k - 1] hosts a fresh copy of the
// base learner while it contains the current time, so exactly
// floor(log2 t) + 1 instances are active at time t. The played distribution
// is the weight mixture of the active bases. Weights start at
// eta = min(1/2, 1/sqrt(|I|)) and are updated multiplicatively with payoffs
// mapped from [-1, 1] to [0, 1].
class Saol : public ArmLearner {
 public:
  struct Instance {
    std::int64_t start;
    std::int64_t end;
    double eta;
    double weight;
    std::unique_ptr<ArmLearner> base;
  };

  // `base` is the prototype for every interval's learner (RM+ by default).
  explicit Saol(int num_arms, std::unique_ptr<ArmLearner> base = nullptr);

  int num_arms() const override { return num_arms_; }
  const std::vector<double>& Policy() const override { return policy_; }
  void Update(std::span<const double> payoffs) override;
  std::unique_ptr<ArmLearner> Fresh() const override;

  std::int64_t time() const { return t_; }
  const std::vector<Instance>& active() const { return active_; }

  // Number of intervals of the family that contain t.
  static int ActiveCountAt(std::int64_t t);

 private:
  void Spawn();
  void RecomputePolicy();

  int num_arms_;
  std::unique_ptr<ArmLearner> prototype_;
  std::int64_t t_ = 1;
  std::vector<Instance> active_;
  std::vector<double> policy_;
};

}  // namespace rrps::learners

#endif  // RRPS_LEARNERS_SAOL_H_
