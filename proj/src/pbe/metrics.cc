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

#include "rrps/pbe/metrics.h"

#include <cmath>
#include <stdexcept>

#include "rrps/engine/seeding.h"
#include "rrps/pbe/parallel.h"

namespace rrps::pbe {

using json = nlohmann::json;

namespace {

nlohmann::ordered_json EstimateJson(const Estimate& e) {
  return {{"mean", e.mean}, {"se", e.se}};
}

Estimate EstimateFrom(const json& j) {
  return {j.at("mean").get<double>(), j.at("se").get<double>()};
}

}  // namespace

double AggregateScore(double pop_return, double wp_expl) {
  return pop_return - wp_expl;
}

void FinishRecord(MetricsRecord& r) {
  r.agg_score.mean = AggregateScore(r.pop_return.mean, r.wp_expl.mean);
  r.agg_score.se = std::hypot(r.pop_return.se, r.wp_expl.se);
}

nlohmann::ordered_json MetricsRecord::ToJson() const {
  nlohmann::ordered_json j;
  j["agent"] = agent;
  j["pop_return"] = EstimateJson(pop_return);
  j["wp_expl"] = EstimateJson(wp_expl);
  j["wp_expl_bot"] = wp_expl_bot;
  j["learned_expl"] = learned_expl ? json(*learned_expl) : json(nullptr);
  j["agg_score"] = EstimateJson(agg_score);
  j["episodes_per_bot"] = episodes_per_bot;
  j["per_bot"] = per_bot;
  return j;
}

MetricsRecord MetricsRecord::FromJson(const json& j) {
  try {
    MetricsRecord r;
    r.agent = j.at("agent").get<std::string>();
    r.pop_return = EstimateFrom(j.at("pop_return"));
    r.wp_expl = EstimateFrom(j.at("wp_expl"));
    r.wp_expl_bot = j.value("wp_expl_bot", "");
    if (j.contains("learned_expl") && !j["learned_expl"].is_null()) {
      r.learned_expl = j["learned_expl"].get<double>();
    }
    r.agg_score = EstimateFrom(j.at("agg_score"));
    r.episodes_per_bot = j.at("episodes_per_bot").get<int>();
    r.per_bot = j.value("per_bot", std::vector<double>{});
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed metrics record: ") +
                                e.what());
  }
}

void EvalConfig::Validate() const {
  if (episodes_per_bot < 1) {
    throw std::invalid_argument("episodes per bot must be >= 1");
  }
  episode.Validate();
}

MetricsRecord EvaluateAgent(const std::string& name, const AgentFactory& agent,
                            const bots::Population& pop,
                            const EvalConfig& config) {
  config.Validate();
  const int n = pop.size();
  std::vector<Estimate> per_bot(n);
  ParallelFor(n, config.workers, [&](int j) {
    std::unique_ptr<Agent> a = agent();
    std::unique_ptr<Agent> bot = pop.MakeBot(j);
    std::vector<int> returns(config.episodes_per_bot);
    for (int e = 0; e < config.episodes_per_bot; ++e) {
      returns[e] = PlayEpisode(*a, *bot, config.episode,
                               DeriveEpisodeSeed(config.seed,
                                                 seed_streams::kAgent, j, e))
                       .return0;
    }
    per_bot[j] = MeanAndError(returns);
  });

  MetricsRecord r;
  r.agent = name;
  r.episodes_per_bot = config.episodes_per_bot;
  double var = 0.0;
  int worst = 0;
  for (int j = 0; j < n; ++j) {
    r.per_bot.push_back(per_bot[j].mean);
    r.pop_return.mean += per_bot[j].mean;
    var += per_bot[j].se * per_bot[j].se;
    if (-per_bot[j].mean > -per_bot[worst].mean) worst = j;
  }
  r.pop_return.mean /= n;
  r.pop_return.se = std::sqrt(var) / n;
  r.wp_expl = {-per_bot[worst].mean, per_bot[worst].se};
  r.wp_expl_bot = pop.spec(worst).name;
  FinishRecord(r);
  return r;
}

}  // namespace rrps::pbe
