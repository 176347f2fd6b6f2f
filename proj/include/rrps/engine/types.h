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

#ifndef RRPS_ENGINE_TYPES_H_
#define RRPS_ENGINE_TYPES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rrps {

// The three moves, ordered by index. Ties anywhere in the code base are
// broken towards the lowest index.
enum class Action : int { kRock = 0, kPaper = 1, kScissors = 2 };

inline constexpr int kNumActions = 3;
inline constexpr std::array<Action, kNumActions> kAllActions = {
    Action::kRock, Action::kPaper, Action::kScissors};

constexpr int Index(Action a) { return static_cast<int>(a); }
constexpr Action ActionFromIndex(int i) { return static_cast<Action>(i); }

// The action that beats `a` (Rock beats Scissors, Paper beats Rock,
// Scissors beats Paper).
constexpr Action Beat(Action a) { return ActionFromIndex((Index(a) + 1) % 3); }
// The action that `a` beats; inverse of Beat.
constexpr Action LosesTo(Action a) {
  return ActionFromIndex((Index(a) + 2) % 3);
}

// Reward for the player choosing `mine` against `theirs`: +1, 0 or -1.
constexpr int Payoff(Action mine, Action theirs) {
  const int d = (Index(mine) - Index(theirs) + 3) % 3;
  return d == 0 ? 0 : (d == 1 ? 1 : -1);
}

struct Rewards {
  int r0;
  int r1;
  bool operator==(const Rewards&) const = default;
};

constexpr Rewards JointPayoff(Action a0, Action a1) {
  const int r0 = Payoff(a0, a1);
  return {r0, -r0};
}

char ActionChar(Action a);
// Parses 'R', 'P' or 'S' (case-insensitive).
std::optional<Action> ParseAction(char c);

// One step of play, always from a fixed player's perspective.
struct JointAction {
  Action mine;
  Action theirs;

  constexpr int index() const { return 3 * Index(mine) + Index(theirs); }
  constexpr JointAction Swapped() const { return {theirs, mine}; }
  bool operator==(const JointAction&) const = default;
};

inline constexpr int kNumJointActions = 9;

constexpr JointAction JointFromIndex(int i) {
  return {ActionFromIndex(i / 3), ActionFromIndex(i % 3)};
}

// The joint actions of one episode so far, seen by one player.
using History = std::vector<JointAction>;

// Probability triple indexed by Action.
struct ActionDistribution {
  std::array<double, kNumActions> p{};

  double operator[](Action a) const { return p[Index(a)]; }
  double& operator[](Action a) { return p[Index(a)]; }

  static ActionDistribution Uniform() { return {{1.0 / 3, 1.0 / 3, 1.0 / 3}}; }
  static ActionDistribution PointMass(Action a) {
    ActionDistribution d;
    d[a] = 1.0;
    return d;
  }
  // (1 - noise) * PointMass(a) + noise * Uniform().
  static ActionDistribution Blend(Action a, double noise);

  // Nonnegative components summing to one within `tolerance`.
  bool IsValid(double tolerance = 1e-9) const;
  // Expected payoff of `mine` against this distribution.
  double ExpectedPayoffAgainst(Action mine) const;
  // Lowest-index best response to this distribution.
  Action BestResponse() const;
  // Lowest-index mode.
  Action Argmax() const;
};

}  // namespace rrps

#endif  // RRPS_ENGINE_TYPES_H_
