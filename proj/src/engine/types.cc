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

#include "rrps/engine/types.h"

#include <cctype>
#include <cmath>

namespace rrps {

char ActionChar(Action a) {
  static constexpr char kChars[] = {'R', 'P', 'S'};
  return kChars[Index(a)];
}

std::optional<Action> ParseAction(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'R':
      return Action::kRock;
    case 'P':
      return Action::kPaper;
    case 'S':
      return Action::kScissors;
    default:
      return std::nullopt;
  }
}

ActionDistribution ActionDistribution::Blend(Action a, double noise) {
  ActionDistribution d;
  for (Action b : kAllActions) d[b] = noise / 3.0;
  d[a] += 1.0 - noise;
  return d;
}

bool ActionDistribution::IsValid(double tolerance) const {
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x)) return false;
    sum += x;
  }
  return std::abs(sum - 1.0) <= tolerance;
}

double ActionDistribution::ExpectedPayoffAgainst(Action mine) const {
  double ev = 0.0;
  for (Action theirs : kAllActions) ev += p[Index(theirs)] * Payoff(mine, theirs);
  return ev;
}

Action ActionDistribution::BestResponse() const {
  Action best = Action::kRock;
  double best_ev = ExpectedPayoffAgainst(best);
  for (Action a : {Action::kPaper, Action::kScissors}) {
    const double ev = ExpectedPayoffAgainst(a);
    if (ev > best_ev) {
      best = a;
      best_ev = ev;
    }
  }
  return best;
}

Action ActionDistribution::Argmax() const {
  int best = 0;
  for (int i = 1; i < kNumActions; ++i) {
    if (p[i] > p[best]) best = i;
  }
  return ActionFromIndex(best);
}

}  // namespace rrps
