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

#ifndef RRPS_LEARNERS_REGRET_H_
#define RRPS_LEARNERS_REGRET_H_

#include <memory>
#include <span>
#include <vector>

namespace rrps::learners {

// A full-information online learner over a fixed set of arms. Payoffs are
// per-arm values in [-1, 1]; Update() assumes the learner's own current
// Policy() was the distribution played.
class ArmLearner {
 public:
  virtual ~ArmLearner() = default;

  virtual int num_arms() const = 0;
  virtual const std::vector<double>& Policy() const = 0;
  virtual void Update(std::span<const double> payoffs) = 0;
  // A new learner with the same configuration and no history.
  virtual std::unique_ptr<ArmLearner> Fresh() const = 0;
};

// Proportional to the positive parts of `regrets`; uniform when none is
// positive.
std::vector<double> RegretMatchingPolicy(std::span<const double> regrets);

// regrets[a] += u[a] - <played, u>, clipped at zero for RM+.
void RegretUpdate(std::span<double> regrets, std::span<const double> payoffs,
                  std::span<const double> played, bool plus);

// Regret matching (Hart and Mas-Colell) and its clipped variant RM+.
class RegretMatcher : public ArmLearner {
 public:
  RegretMatcher(int num_arms, bool plus);

  int num_arms() const override { return static_cast<int>(regrets_.size()); }
  const std::vector<double>& Policy() const override { return policy_; }
  void Update(std::span<const double> payoffs) override;
  std::unique_ptr<ArmLearner> Fresh() const override;

  // Update against an explicitly given played distribution.
  void UpdateWithPlayed(std::span<const double> payoffs,
                        std::span<const double> played);

  bool plus() const { return plus_; }
  const std::vector<double>& regrets() const { return regrets_; }

 private:
  bool plus_;
  std::vector<double> regrets_;
  std::vector<double> policy_;
};

}  // namespace rrps::learners

#endif  // RRPS_LEARNERS_REGRET_H_
