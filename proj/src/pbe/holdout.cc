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

#include "rrps/pbe/holdout.h"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "rrps/engine/seeding.h"
#include "rrps/pbe/parallel.h"
#include "rrps/pbe/ranking.h"
#include "rrps/pbe/stats.h"

namespace rrps::pbe {

void HoldoutConfig::Validate(int population_size) const {
  if (n_test < 1 || n_test >= population_size) {
    throw std::invalid_argument("n_test must be in [1, " +
                                std::to_string(population_size - 1) + "]");
  }
  if (folds < 1) throw std::invalid_argument("folds must be >= 1");
  if (train_episodes < 0) {
    throw std::invalid_argument("train episodes must be >= 0");
  }
  if (eval_episodes < 1) {
    throw std::invalid_argument("eval episodes must be >= 1");
  }
  episode.Validate();
}

std::vector<std::vector<int>> SampleFolds(int population_size, int n_test,
                                          int folds, std::uint64_t seed) {
  std::vector<std::vector<int>> out;
  for (int f = 0; f < folds; ++f) {
    std::mt19937_64 gen(
        DeriveEpisodeSeed(seed, seed_streams::kHoldoutFolds, 0, f));
    std::vector<int> slots(population_size);
    std::iota(slots.begin(), slots.end(), 0);
    // Partial Fisher-Yates: the first n_test positions are the sample.
    for (int i = 0; i < n_test; ++i) {
      const int k = i + static_cast<int>(UniformIndex(gen, population_size - i));
      std::swap(slots[i], slots[k]);
    }
    std::vector<int> test(slots.begin(), slots.begin() + n_test);
    std::sort(test.begin(), test.end());
    out.push_back(std::move(test));
  }
  return out;
}

namespace {

double MeanOver(LearningAgent& agent, const bots::Population& pop,
                const std::vector<int>& slots, const HoldoutConfig& config,
                int fold) {
  double total = 0.0;
  for (int slot : slots) {
    auto bot = pop.MakeBot(slot);
    std::vector<int> returns(config.eval_episodes);
    for (int e = 0; e < config.eval_episodes; ++e) {
      returns[e] = PlayEpisode(agent, *bot, config.episode,
                               DeriveEpisodeSeed(config.seed,
                                                 seed_streams::kHoldoutEval +
                                                     fold,
                                                 slot, e))
                       .return0;
    }
    total += MeanAndError(returns).mean;
  }
  return total / slots.size();
}

}  // namespace

HoldoutReport HoldoutEval(const LearningAgentFactory& agent,
                          const bots::Population& pop,
                          const HoldoutConfig& config) {
  config.Validate(pop.size());
  {
    auto probe = agent();
    if (!probe) throw std::invalid_argument("agent factory returned nothing");
    if (!probe->persistent()) {
      throw std::invalid_argument(
          "hold-out training needs a persistent agent (set persist)");
    }
  }
  const auto tests = SampleFolds(pop.size(), config.n_test, config.folds,
                                 config.seed);
  HoldoutReport report;
  report.folds.resize(config.folds);
  ParallelFor(config.folds, config.workers, [&](int f) {
    HoldoutFold& fold = report.folds[f];
    fold.test = tests[f];
    for (int s = 0; s < pop.size(); ++s) {
      if (!std::binary_search(fold.test.begin(), fold.test.end(), s)) {
        fold.train.push_back(s);
      }
    }
    std::unique_ptr<LearningAgent> a = agent();
    std::vector<std::unique_ptr<Agent>> opponents;
    for (int s : fold.train) opponents.push_back(pop.MakeBot(s));
    for (int e = 0; e < config.train_episodes; ++e) {
      const int k = e % static_cast<int>(fold.train.size());
      PlayEpisode(*a, *opponents[k], config.episode,
                  DeriveEpisodeSeed(config.seed,
                                    seed_streams::kHoldoutTrain + f,
                                    fold.train[k], e));
    }
    a->SetFrozen(true);
    fold.train_mean = MeanOver(*a, pop, fold.train, config, f);
    fold.test_mean = MeanOver(*a, pop, fold.test, config, f);
  });
  for (const HoldoutFold& f : report.folds) {
    report.train_mean += f.train_mean / config.folds;
    report.test_mean += f.test_mean / config.folds;
  }
  return report;
}

void WriteHoldoutCsv(std::ostream& os, const HoldoutReport& report,
                     const bots::Population& pop) {
  auto ids = [&](const std::vector<int>& slots) {
    std::string s;
    for (int slot : slots) {
      s += (s.empty() ? "" : " ") + std::to_string(pop.spec(slot).id);
    }
    return s;
  };
  os << "fold,train_ids,test_ids,train_mean,test_mean\n";
  for (std::size_t f = 0; f < report.folds.size(); ++f) {
    const HoldoutFold& fold = report.folds[f];
    os << f << ',' << ids(fold.train) << ',' << ids(fold.test) << ','
       << FormatMean(fold.train_mean) << ',' << FormatMean(fold.test_mean)
       << '\n';
  }
}

}  // namespace rrps::pbe
