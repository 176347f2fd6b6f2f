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

#ifndef RRPS_LEARNERS_REGRET_AGENT_H_
#define RRPS_LEARNERS_REGRET_AGENT_H_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "rrps/engine/episode.h"
#include "rrps/engine/observation.h"
#include "rrps/learners/regret.h"

namespace rrps::learners {

enum class ContextMode {
  kNone,      // one learner over the three actions
  kDiscrete,  // one learner per recall-R observation code
  kExperts,   // one learner over 3 actions + 6 history experts
};

ContextMode ParseContextMode(const std::string& s);
std::string ContextModeName(ContextMode m);

inline constexpr int kNumExpertArms = 9;

// Actions suggested by the nine expert arms: R, P, S, then the opponent's
// last action o, our last action u, beat(o), beat(u), loses_to(o),
// loses_to(u). With no history the six history arms have no suggestion
// (nullopt) and play uniformly.
std::array<std::optional<Action>, kNumExpertArms> ExpertSuggestions(
    std::span<const JointAction> history);

// Runs an ArmLearner as a player. Contexts are created lazily; in discrete
// mode an observation code never seen before acts as a fresh learner.
// Learners are cleared on Reset() unless the agent is persistent. A frozen
// agent keeps acting but stops updating.
class RegretAgent : public LearningAgent {
 public:
  RegretAgent(std::string name, std::unique_ptr<ArmLearner> prototype,
              ContextMode mode, int recall, bool persist);

  std::string_view name() const override { return name_; }
  void Reset() override;
  ActionDistribution Act(const History& history) override;
  void Observe(const History& history, int reward) override;

  void SetFrozen(bool frozen) override { frozen_ = frozen; }
  bool frozen() const override { return frozen_; }
  bool persistent() const override { return persist_; }

  ContextMode mode() const { return mode_; }
  int num_contexts() const { return static_cast<int>(learners_.size()); }
  // The learner for `code`, or nullptr if that context never updated.
  const ArmLearner* learner(ObservationCode code) const;

 private:
  ObservationCode ContextOf(std::span<const JointAction> history) const;

  std::string name_;
  std::unique_ptr<ArmLearner> prototype_;
  ContextMode mode_;
  int recall_;
  bool persist_;
  bool frozen_ = false;
  std::unordered_map<ObservationCode, std::unique_ptr<ArmLearner>> learners_;
};

// The uniform policy. It counts as a learning agent that has nothing to
// learn, so it can be trained and frozen like any other.
class UniformAgent : public LearningAgent {
 public:
  std::string_view name() const override { return "uniform"; }
  void Reset() override {}
  ActionDistribution Act(const History&) override {
    return ActionDistribution::Uniform();
  }
  void Observe(const History&, int) override {}
  void SetFrozen(bool frozen) override { frozen_ = frozen; }
  bool frozen() const override { return frozen_; }
  bool persistent() const override { return true; }

 private:
  bool frozen_ = false;
};

}  // namespace rrps::learners

#endif  // RRPS_LEARNERS_REGRET_AGENT_H_
