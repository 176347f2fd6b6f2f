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

#include "rrps/learners/config.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rrps/learners/regret_agent.h"
#include "rrps/learners/saol.h"
#include "rrps/learners/swap.h"

namespace rrps::learners {

using json = nlohmann::json;

const std::vector<std::string>& AlgorithmNames() {
  static const std::vector<std::string> names = {
      "uniform", "rm", "rm_plus", "saol", "swap_rm_plus", "qlearn"};
  return names;
}

namespace {

std::string JoinNames() {
  std::string out;
  for (const std::string& n : AlgorithmNames()) {
    out += (out.empty() ? "" : ", ") + n;
  }
  return out;
}

}  // namespace

AgentConfig AgentConfig::FromJson(const json& j) {
  static const std::set<std::string> kKeys = {
      "algorithm", "recall",           "contexts", "persist",
      "alpha",     "gamma",            "epsilon_schedule", "episodes",
      "allow_large_table"};
  if (!j.is_object()) throw std::invalid_argument("agent config must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!kKeys.contains(key)) {
      throw std::invalid_argument("unknown agent config key '" + key + "'");
    }
  }
  AgentConfig c;
  try {
    c.algorithm = j.value("algorithm", c.algorithm);
    c.recall = j.value("recall", c.recall);
    c.contexts = j.value("contexts", c.contexts);
    c.persist = j.value("persist", c.persist);
    c.alpha = j.value("alpha", c.alpha);
    c.gamma = j.value("gamma", c.gamma);
    c.episodes = j.value("episodes", c.episodes);
    c.allow_large_table = j.value("allow_large_table", c.allow_large_table);
    if (j.contains("epsilon_schedule")) {
      const json& e = j.at("epsilon_schedule");
      c.epsilon.start = e.value("start", c.epsilon.start);
      c.epsilon.end = e.value("end", c.epsilon.end);
      c.epsilon.fraction = e.value("fraction", c.epsilon.fraction);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad agent config: ") + e.what());
  }
  c.Validate();
  return c;
}

nlohmann::ordered_json AgentConfig::ToJson() const {
  nlohmann::ordered_json j;
  j["algorithm"] = algorithm;
  j["recall"] = recall;
  j["contexts"] = contexts;
  j["persist"] = persist;
  j["alpha"] = alpha;
  j["gamma"] = gamma;
  j["epsilon_schedule"] = {{"start", epsilon.start},
                           {"end", epsilon.end},
                           {"fraction", epsilon.fraction}};
  j["episodes"] = episodes;
  j["allow_large_table"] = allow_large_table;
  return j;
}

void AgentConfig::Validate() const {
  const auto& names = AlgorithmNames();
  if (std::find(names.begin(), names.end(), algorithm) == names.end()) {
    throw std::invalid_argument("unknown algorithm '" + algorithm +
                                "' (valid: " + JoinNames() + ")");
  }
  const ContextMode mode = ParseContextMode(contexts);
  if (recall < 0 || recall > kMaxRecall) {
    throw std::invalid_argument("recall must be in [0, " +
                                std::to_string(kMaxRecall) + "]");
  }
  if (mode == ContextMode::kExperts && recall != 1 && algorithm != "qlearn" &&
      algorithm != "uniform") {
    throw std::invalid_argument("history experts use recall 1");
  }
  if (episodes < 1) throw std::invalid_argument("episodes must be >= 1");
  if (algorithm == "qlearn") {
    QConfig q{recall, alpha, gamma, epsilon, episodes, allow_large_table};
    q.Validate();
  }
}

std::string AgentConfig::Label() const {
  if (algorithm == "uniform") return algorithm;
  if (algorithm == "qlearn") return "qlearn[R=" + std::to_string(recall) + "]";
  std::string label = algorithm + "[" + contexts;
  if (contexts == "discrete") label += ",R=" + std::to_string(recall);
  if (persist) label += ",persist";
  return label + "]";
}

std::unique_ptr<LearningAgent> MakeAgent(const AgentConfig& config) {
  config.Validate();
  if (config.algorithm == "uniform") return std::make_unique<UniformAgent>();
  if (config.algorithm == "qlearn") {
    QConfig q{config.recall, config.alpha,    config.gamma,
              config.epsilon, config.episodes, config.allow_large_table};
    return std::make_unique<QLearner>(q, config.Label());
  }
  const ContextMode mode = ParseContextMode(config.contexts);
  const int arms = mode == ContextMode::kExperts ? kNumExpertArms : kNumActions;
  std::unique_ptr<ArmLearner> proto;
  if (config.algorithm == "rm") {
    proto = std::make_unique<RegretMatcher>(arms, false);
  } else if (config.algorithm == "rm_plus") {
    proto = std::make_unique<RegretMatcher>(arms, true);
  } else if (config.algorithm == "saol") {
    proto = std::make_unique<Saol>(arms);
  } else {
    proto = std::make_unique<SwapRegret>(arms);
  }
  return std::make_unique<RegretAgent>(config.Label(), std::move(proto), mode,
                                       config.recall, config.persist);
}

}  // namespace rrps::learners
