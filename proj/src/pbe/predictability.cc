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

#include "rrps/pbe/predictability.h"

#include <ostream>
#include <stdexcept>

#include "rrps/bots/predictors.h"
#include "rrps/engine/seeding.h"
#include "rrps/pbe/parallel.h"
#include "rrps/pbe/ranking.h"

namespace rrps::pbe {

void PredictabilityConfig::Validate() const {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  if (episodes < 1) throw std::invalid_argument("episodes must be >= 1");
  episode.Validate();
}

double MarkovArgmaxAccuracy(const std::vector<Action>& actions, int order) {
  if (actions.empty()) return 0.0;
  // Present the sequence as the opponent channel of a history.
  History h;
  h.reserve(actions.size());
  bots::MarkovModel model(order, bots::Channel::kOpp);
  int hits = 0;
  for (Action a : actions) {
    const auto counts = model.Counts(h, order);
    const Action guess = counts ? bots::ArgmaxCount(*counts) : Action::kRock;
    hits += guess == a;
    h.push_back({Action::kRock, a});
    model.Append(h);
  }
  return static_cast<double>(hits) / actions.size();
}

PredictabilityMatrix ComputePredictability(const bots::Population& pop,
                                           const PredictabilityConfig& config) {
  config.Validate();
  const int n = pop.size();
  PredictabilityMatrix m;
  m.names = pop.names();
  m.order = config.order;
  m.episodes = config.episodes;
  m.accuracy.assign(n, std::vector<double>(n, 0.0));
  ParallelFor(n * n, config.workers, [&](int cell) {
    const int i = cell / n;
    const int j = cell % n;
    auto row = pop.MakeBot(i);
    auto col = pop.MakeBot(j);
    double total = 0.0;
    for (int e = 0; e < config.episodes; ++e) {
      const EpisodeResult r = PlayEpisode(
          *row, *col, config.episode,
          DeriveEpisodeSeed(config.seed, seed_streams::kPredictability + i, j,
                            e));
      std::vector<Action> own;
      own.reserve(r.actions.size());
      for (const JointAction& step : r.actions) own.push_back(step.mine);
      total += MarkovArgmaxAccuracy(own, config.order);
    }
    m.accuracy[i][j] = total / config.episodes;
  });
  return m;
}

void WritePredictabilityCsv(std::ostream& os, const PredictabilityMatrix& m) {
  os << "bot";
  for (const std::string& name : m.names) os << ',' << name;
  os << '\n';
  for (std::size_t i = 0; i < m.names.size(); ++i) {
    os << m.names[i];
    for (double x : m.accuracy[i]) os << ',' << FormatMean(x);
    os << '\n';
  }
}

}  // namespace rrps::pbe
