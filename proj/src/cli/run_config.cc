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

#include "rrps/cli/run_config.h"

#include <algorithm>
#include <charconv>
#include <cstring>

namespace rrps::cli {

using json = nlohmann::json;

const std::vector<std::string>& CommandNames() {
  static const std::vector<std::string> names = {
      "crosstable", "eval",           "exploit", "rank",
      "holdout",    "predictability", "play"};
  return names;
}

namespace {

std::string JoinNames(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
  return s;
}

template <typename T>
T Get(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw UsageError("config key '" + key + "' has the wrong type: " +
                     j.dump());
  }
}

void RequireObject(const json& j, const std::string& key) {
  if (!j.is_object()) {
    throw UsageError("config key '" + key + "' must be an object");
  }
}

void MergeExploit(ExploitSettings& s, const json& j) {
  RequireObject(j, "exploit");
  for (const auto& [key, v] : j.items()) {
    const std::string path = "exploit." + key;
    if (key == "recalls") {
      s.recalls = Get<std::vector<int>>(v, path);
    } else if (key == "episodes") {
      s.episodes = Get<std::int64_t>(v, path);
    } else if (key == "evaluations") {
      s.evaluations = Get<int>(v, path);
    } else if (key == "eval_episodes") {
      s.eval_episodes = Get<int>(v, path);
    } else if (key == "window") {
      s.window = Get<int>(v, path);
    } else if (key == "alpha") {
      s.alpha = Get<double>(v, path);
    } else if (key == "gamma") {
      s.gamma = Get<double>(v, path);
    } else {
      throw UsageError("unknown config key '" + path + "'");
    }
  }
}

void MergeHoldout(HoldoutSettings& s, const json& j) {
  RequireObject(j, "holdout");
  for (const auto& [key, v] : j.items()) {
    const std::string path = "holdout." + key;
    if (key == "n_test") {
      s.n_test = Get<int>(v, path);
    } else if (key == "folds") {
      s.folds = Get<int>(v, path);
    } else if (key == "train_episodes") {
      s.train_episodes = Get<int>(v, path);
    } else if (key == "eval_episodes") {
      s.eval_episodes = Get<int>(v, path);
    } else {
      throw UsageError("unknown config key '" + path + "'");
    }
  }
}

bool UsesEpisodes(const std::string& c) {
  return c == "crosstable" || c == "eval" || c == "rank" ||
         c == "predictability";
}

}  // namespace

RunConfig RunConfig::Defaults(const std::string& command) {
  const auto& names = CommandNames();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    throw UsageError("unknown command '" + command +
                     "'; valid commands: " + JoinNames(names));
  }
  RunConfig c;
  c.command = command;
  if (command == "predictability") c.episodes = 10;
  // Hold-out training only makes sense for agents that keep what they learn.
  if (command == "holdout") c.agent.persist = true;
  return c;
}

void RunConfig::Merge(const json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "command") {
      if (Get<std::string>(v, key) != command) {
        throw UsageError("config is for command '" + v.get<std::string>() +
                         "', not '" + command + "'");
      }
    } else if (key == "population") {
      population = Get<std::string>(v, key);
    } else if (key == "episodes") {
      episodes = Get<int>(v, key);
    } else if (key == "steps") {
      steps = Get<int>(v, key);
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) {
        throw UsageError("config key 'seed' must be a non-negative integer");
      }
      seed = v.get<std::uint64_t>();
    } else if (key == "workers") {
      workers = Get<int>(v, key);
    } else if (key == "out") {
      out = Get<std::string>(v, key);
    } else if (key == "match_log") {
      match_log = Get<bool>(v, key);
    } else if (key == "bot") {
      bot = Get<std::string>(v, key);
    } else if (key == "learned_expl") {
      learned_expl = Get<bool>(v, key);
    } else if (key == "order") {
      order = Get<int>(v, key);
    } else if (key == "crosstable") {
      crosstable = Get<std::string>(v, key);
    } else if (key == "metrics") {
      metrics = Get<std::vector<std::string>>(v, key);
    } else if (key == "agent") {
      RequireObject(v, key);
      json merged = agent.ToJson();
      for (const auto& [k, x] : v.items()) merged[k] = x;
      try {
        agent = learners::AgentConfig::FromJson(merged);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else if (key == "exploit") {
      MergeExploit(exploit, v);
    } else if (key == "holdout") {
      MergeHoldout(holdout, v);
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
}

nlohmann::ordered_json RunConfig::ToJson() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["population"] = population;
  j["steps"] = steps;
  j["seed"] = seed;
  if (command != "play") j["workers"] = workers;
  j["out"] = out;
  if (UsesEpisodes(command)) j["episodes"] = episodes;
  if (command == "crosstable") j["match_log"] = match_log;
  if (command == "exploit" || command == "play") j["bot"] = bot;
  if (command == "eval" || command == "holdout") j["agent"] = agent.ToJson();
  if (command == "eval") j["learned_expl"] = learned_expl;
  if (command == "exploit" || (command == "eval" && learned_expl)) {
    j["exploit"] = {{"recalls", exploit.recalls},
                    {"episodes", exploit.episodes},
                    {"evaluations", exploit.evaluations},
                    {"eval_episodes", exploit.eval_episodes},
                    {"window", exploit.window},
                    {"alpha", exploit.alpha},
                    {"gamma", exploit.gamma}};
  }
  if (command == "holdout") {
    j["holdout"] = {{"n_test", holdout.n_test},
                    {"folds", holdout.folds},
                    {"train_episodes", holdout.train_episodes},
                    {"eval_episodes", holdout.eval_episodes}};
  }
  if (command == "predictability") j["order"] = order;
  if (command == "rank") {
    j["crosstable"] = crosstable;
    j["metrics"] = metrics;
  }
  return j;
}

void RunConfig::Validate() const {
  if (population.empty()) throw UsageError("population must not be empty");
  if (steps < 1) {
    throw UsageError("steps must be >= 1, got " + std::to_string(steps));
  }
  if (workers < 0) throw UsageError("workers must be >= 0");
  if (out.empty()) throw UsageError("out must not be empty");
  if (UsesEpisodes(command) && episodes < 1) {
    throw UsageError("episodes must be >= 1, got " + std::to_string(episodes));
  }
  if ((command == "exploit" || command == "play") && bot.empty()) {
    throw UsageError("a bot name is required (--bot)");
  }
  if (command == "predictability" && (order < 0 || order > 8)) {
    throw UsageError("order must be in [0, 8]");
  }
  try {
    if (command == "eval" || command == "holdout") agent.Validate();
    if (command == "exploit" || (command == "eval" && learned_expl)) {
      Exploiter().Validate();
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

EpisodeConfig RunConfig::Episode() const {
  EpisodeConfig e;
  e.num_steps = steps;
  e.recall = agent.recall;
  return e;
}

learners::ExploiterConfig RunConfig::Exploiter() const {
  learners::ExploiterConfig c;
  c.recalls = exploit.recalls;
  c.episodes = exploit.episodes;
  c.num_evaluations = exploit.evaluations;
  c.eval_episodes = exploit.eval_episodes;
  c.window = exploit.window;
  c.q.alpha = exploit.alpha;
  c.q.gamma = exploit.gamma;
  c.episode = Episode();
  c.seed = seed;
  return c;
}

pbe::HoldoutConfig RunConfig::Holdout() const {
  pbe::HoldoutConfig c;
  c.n_test = holdout.n_test;
  c.folds = holdout.folds;
  c.train_episodes = holdout.train_episodes;
  c.eval_episodes = holdout.eval_episodes;
  c.episode = Episode();
  c.seed = seed;
  c.workers = workers;
  return c;
}

bots::Population RunConfig::LoadPopulation() const {
  if (population == "builtin") return bots::Population::Default();
  return bots::Population::Build(bots::LoadCatalogFile(population));
}

std::optional<std::uint64_t> ParseSeedEnv(const char* value) {
  if (value == nullptr || *value == '\0') return std::nullopt;
  std::uint64_t seed = 0;
  const char* end = value + std::strlen(value);
  const auto [ptr, ec] = std::from_chars(value, end, seed);
  if (ec != std::errc() || ptr != end) {
    throw UsageError(std::string(kSeedEnvVar) +
                     " must be a non-negative integer, got '" + value + "'");
  }
  return seed;
}

}  // namespace rrps::cli
