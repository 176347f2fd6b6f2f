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

#ifndef RRPS_ENGINE_EPISODE_H_
#define RRPS_ENGINE_EPISODE_H_

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rrps/engine/types.h"

namespace rrps {

struct EpisodeConfig {
  int num_steps = 1000;  // K
  int recall = 1;        // R, used by agents that take a recall default

  // Throws std::invalid_argument unless K >= 1 and R >= 0.
  void Validate() const;
};

// Anything that can sit in a seat of the repeated game: competition bots,
// online learners, exploiters and humans.
//
// Contract per episode: Reset(), then for every step Act() followed by
// Observe() with the history extended by the realized joint action. Act()
// must not change observable state; all randomness lives in the returned
// distribution and is sampled by the engine.
class Agent {
 public:
  virtual ~Agent() = default;

  virtual std::string_view name() const = 0;
  virtual void Reset() = 0;
  virtual ActionDistribution Act(const History& history) = 0;
  virtual void Observe(const History& history, int reward) = 0;
};

// Agents whose learning can be switched off. Persistent learners keep what
// they learned across Reset(); the others start each episode from scratch.
class LearningAgent : public Agent {
 public:
  virtual void SetFrozen(bool frozen) = 0;
  virtual bool frozen() const = 0;
  virtual bool persistent() const = 0;
};

class InvalidPolicyError : public std::runtime_error {
 public:
  InvalidPolicyError(std::string source, int step,
                     const ActionDistribution& dist);

  const std::string& source() const { return source_; }
  int step() const { return step_; }

 private:
  std::string source_;
  int step_;
};

struct EpisodeResult {
  History actions;            // from player 0's perspective
  std::vector<int> rewards0;  // one per step, each in {-1, 0, +1}
  int return0 = 0;

  int return1() const { return -return0; }
};

// Samples an action from `dist` using one uniform draw `u` in [0, 1).
Action SampleAction(const ActionDistribution& dist, double u);

// Plays one K-step episode. Both agents are reset first. Each step draws
// player 0's action and then player 1's action from one mt19937_64 stream
// seeded with `seed`, so a (agents, config, seed) triple fully determines
// the result.
EpisodeResult PlayEpisode(Agent& p0, Agent& p1, const EpisodeConfig& config,
                          std::uint64_t seed);

// Recomputes player 0's return from two action strings over "RPS".
// Throws std::invalid_argument on length mismatch or foreign characters.
int ReplayReturn(std::string_view actions0, std::string_view actions1);

std::string ActionString(const History& history, bool mine);

}  // namespace rrps

#endif  // RRPS_ENGINE_EPISODE_H_
