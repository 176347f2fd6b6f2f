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

#ifndef RRPS_PBE_PREDICTABILITY_H_
#define RRPS_PBE_PREDICTABILITY_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rrps/bots/population.h"
#include "rrps/engine/episode.h"

namespace rrps::pbe {

// How well an online order-k Markov model of a bot's own past moves
// predicts its next move. A simple stand-in for a learned sequence model.
struct PredictabilityMatrix {
  std::vector<std::string> names;
  // accuracy[i][j]: fraction of steps where the prediction matched bot i's
  // move while it played bot j.
  std::vector<std::vector<double>> accuracy;
  int order = 1;
  int episodes = 0;
};

struct PredictabilityConfig {
  int order = 1;
  int episodes = 10;
  EpisodeConfig episode;
  std::uint64_t seed = 0;
  int workers = 0;

  void Validate() const;
};

// Fraction of steps at which the argmax (lowest index on ties, rock when
// the context is unseen) of the order-k counts over `actions` so far equals
// the next action.
double MarkovArgmaxAccuracy(const std::vector<Action>& actions, int order);

PredictabilityMatrix ComputePredictability(const bots::Population& pop,
                                           const PredictabilityConfig& config);

// Same layout as the cross-table CSV.
void WritePredictabilityCsv(std::ostream& os, const PredictabilityMatrix& m);

}  // namespace rrps::pbe

#endif  // RRPS_PBE_PREDICTABILITY_H_
