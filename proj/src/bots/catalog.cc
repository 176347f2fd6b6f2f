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

// The default 43-slot population.
//
// Seed bots follow their published one-line descriptions. Entrant bots whose
// source is not available are named parameterizations of the predictor
// archetypes; the params below are the whole definition of each slot.
//
// Param keys per family:
//   constant         action: "R"|"P"|"S"
//   fixed-mix        probs: [r, p, s]
//   sequence         source: "rotate"|"pi"|"debruijn81"|"text"
//   reactive         rule: "copy"|"switch"|"foxtrot", repeat_prob, offset
//   statistical      rule: "flat"|"antiflat"|"freq"|"antirotn"|"drift"|
//                    "addshift", window, drift, context, bias
//   count-predictor  decays: [..], level: 0|1, noise
//   markov-predictor order, channel: "opp"|"joint", decay, backoff, noise,
//                    bail
//   history-matcher  max_window, channel, noise
//   meta-switcher    strategies: [{family, params}, ..], decay
//   iocaine          windows: [..], decay

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "rrps/bots/bot_spec.h"

namespace rrps::bots {

using json = nlohmann::json;

namespace {

constexpr std::pair<Family, const char*> kFamilyNames[] = {
    {Family::kConstant, "constant"},
    {Family::kFixedMix, "fixed-mix"},
    {Family::kSequence, "sequence"},
    {Family::kReactive, "reactive"},
    {Family::kStatistical, "statistical"},
    {Family::kCountPredictor, "count-predictor"},
    {Family::kMarkovPredictor, "markov-predictor"},
    {Family::kHistoryMatcher, "history-matcher"},
    {Family::kMetaSwitcher, "meta-switcher"},
    {Family::kIocaine, "iocaine"},
};

json Sub(const char* family, json params) {
  return json{{"family", family}, {"params", std::move(params)}};
}

std::vector<BotSpec> BuildDefaultCatalog() {
  std::vector<std::pair<std::string, std::pair<Family, json>>> slots = {
      {"greenberg",
       {Family::kIocaine,
        {{"windows", {1, 2, 3, 4, 5, 6, 8, 10, 12, 16, 20}}, {"decay", 1.0}}}},
      {"iocainebot",
       {Family::kIocaine, {{"windows", {1, 2, 3, 5, 10, 20}}, {"decay", 1.0}}}},
      {"biopic",
       {Family::kMetaSwitcher,
        {{"strategies",
          {Sub("markov-predictor", {{"order", 1}, {"channel", "opp"}}),
           Sub("markov-predictor", {{"order", 2}, {"channel", "opp"}}),
           Sub("markov-predictor", {{"order", 1}, {"channel", "joint"}}),
           Sub("count-predictor", {{"decays", {0.9}}})}},
         {"decay", 0.98}}}},
      {"boom",
       {Family::kHistoryMatcher,
        {{"max_window", 8}, {"channel", "joint"}, {"noise", 0.05}}}},
      {"shofar",
       {Family::kMetaSwitcher,
        {{"strategies",
          {Sub("history-matcher", {{"max_window", 5}, {"channel", "opp"}}),
           Sub("count-predictor", {{"decays", {0.95}}, {"level", 1}}),
           Sub("markov-predictor", {{"order", 1}, {"channel", "joint"}}),
           Sub("fixed-mix", {{"probs", {1.0 / 3, 1.0 / 3, 1.0 / 3}}})}},
         {"decay", 0.95}}}},
      {"robertot",
       {Family::kCountPredictor,
        {{"decays", {1.0, 0.9, 0.7}}, {"level", 0}, {"noise", 0.1}}}},
      {"phasenbott",
       {Family::kMetaSwitcher,
        {{"strategies",
          {Sub("markov-predictor", {{"order", 1}, {"channel", "opp"}}),
           Sub("markov-predictor", {{"order", 2}, {"channel", "opp"}}),
           Sub("history-matcher", {{"max_window", 6}, {"channel", "joint"}}),
           Sub("count-predictor", {{"decays", {0.9}}, {"level", 1}})}},
         {"decay", 1.0}}}},
      {"mod1bot",
       {Family::kCountPredictor,
        {{"decays", {0.97}}, {"level", 1}, {"noise", 0.0}}}},
      {"sweetrock",
       {Family::kCountPredictor,
        {{"decays", {0.95}}, {"level", 0}, {"noise", 0.1}}}},
      {"piedra",
       {Family::kCountPredictor,
        {{"decays", {0.9}}, {"level", 0}, {"noise", 0.1}}}},
      {"markovbails",
       {Family::kMarkovPredictor,
        {{"order", 3}, {"channel", "opp"}, {"backoff", true}, {"bail", true}}}},
      {"sunNervebot",
       {Family::kMetaSwitcher,
        {{"strategies",
          {Sub("markov-predictor", {{"order", 1}, {"channel", "joint"}}),
           Sub("markov-predictor", {{"order", 2}, {"channel", "opp"}}),
           Sub("history-matcher", {{"max_window", 4}, {"channel", "opp"}}),
           Sub("count-predictor", {{"decays", {0.8}}})}},
         {"decay", 0.9}}}},
      {"markov5",
       {Family::kMarkovPredictor,
        {{"order", 5}, {"channel", "opp"}, {"backoff", true}}}},
      {"antirotnbot",
       {Family::kStatistical, {{"rule", "antirotn"}, {"window", 20}}}},
      {"halbot",
       {Family::kMarkovPredictor,
        {{"order", 2}, {"channel", "joint"}, {"backoff", true}}}},
      {"mixed_strategy",
       {Family::kMetaSwitcher,
        {{"strategies",
          {Sub("count-predictor", {{"decays", {1.0}}}),
           Sub("markov-predictor", {{"order", 1}, {"channel", "opp"}}),
           Sub("fixed-mix", {{"probs", {1.0 / 3, 1.0 / 3, 1.0 / 3}}})}},
         {"decay", 1.0}}}},
      {"randbot",
       {Family::kFixedMix, {{"probs", {1.0 / 3, 1.0 / 3, 1.0 / 3}}}}},
      {"pibot", {Family::kSequence, {{"source", "pi"}}}},
      {"actr_lag2_decay",
       {Family::kMarkovPredictor,
        {{"order", 2}, {"channel", "opp"}, {"decay", 0.95}, {"backoff", true}}}},
      {"marble",
       {Family::kMarkovPredictor,
        {{"order", 1}, {"channel", "joint"}, {"noise", 0.0}}}},
      {"granite",
       {Family::kMarkovPredictor,
        {{"order", 1}, {"channel", "joint"}, {"noise", 0.02}}}},
      {"predbot",
       {Family::kCountPredictor,
        {{"decays", {0.98}}, {"level", 0}, {"noise", 0.0}}}},
      {"zq_move",
       {Family::kHistoryMatcher, {{"max_window", 3}, {"channel", "opp"}}}},
      {"multibot",
       {Family::kMetaSwitcher,
        {{"strategies",
          {Sub("constant", {{"action", "R"}}),
           Sub("constant", {{"action", "P"}}),
           Sub("constant", {{"action", "S"}}),
           Sub("reactive", {{"rule", "copy"}}),
           Sub("count-predictor", {{"decays", {1.0}}})}},
         {"decay", 1.0}}}},
      {"textbot", {Family::kSequence, {{"source", "text"}}}},
      {"debruijn81", {Family::kSequence, {{"source", "debruijn81"}}}},
      {"driftbot",
       {Family::kStatistical,
        {{"rule", "drift"}, {"context", "opp"}, {"drift", 0.01}}}},
      {"adddriftbot2",
       {Family::kStatistical,
        {{"rule", "drift"}, {"context", "joint"}, {"drift", 0.01}}}},
      {"russrocker4",
       {Family::kMarkovPredictor,
        {{"order", 4}, {"channel", "opp"}, {"backoff", false}}}},
      {"switchalot",
       {Family::kReactive, {{"rule", "switch"}, {"repeat_prob", 0.12}}}},
      {"addshiftbot3",
       {Family::kStatistical, {{"rule", "addshift"}, {"bias", 0.5}}}},
      {"foxtrotbot", {Family::kReactive, {{"rule", "foxtrot"}, {"offset", 1}}}},
      {"flatbot3", {Family::kStatistical, {{"rule", "flat"}}}},
      {"inocencio",
       {Family::kHistoryMatcher, {{"max_window", 4}, {"channel", "own"}}}},
      {"r226bot", {Family::kFixedMix, {{"probs", {0.2, 0.2, 0.6}}}}},
      {"sunCrazybot",
       {Family::kCountPredictor,
        {{"decays", {0.5}}, {"level", 0}, {"noise", 0.3}}}},
      {"switchbot",
       {Family::kReactive, {{"rule", "switch"}, {"repeat_prob", 0.0}}}},
      {"peterbot",
       {Family::kMetaSwitcher,
        {{"strategies",
          {Sub("constant", {{"action", "R"}}),
           Sub("constant", {{"action", "P"}}),
           Sub("constant", {{"action", "S"}})}},
         {"decay", 1.0}}}},
      {"freqbot2", {Family::kStatistical, {{"rule", "freq"}}}},
      {"copybot", {Family::kReactive, {{"rule", "copy"}}}},
      {"rotatebot", {Family::kSequence, {{"source", "rotate"}}}},
      {"rockbot", {Family::kConstant, {{"action", "R"}}}},
      {"antiflatbot", {Family::kStatistical, {{"rule", "antiflat"}}}},
  };
  std::vector<BotSpec> catalog;
  catalog.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    catalog.push_back({static_cast<int>(i), slots[i].first,
                       slots[i].second.first, slots[i].second.second});
  }
  return catalog;
}

}  // namespace

std::string FamilyName(Family f) {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "?";
}

Family ParseFamily(const std::string& name) {
  for (const auto& [family, n] : kFamilyNames) {
    if (name == n) return family;
  }
  throw std::invalid_argument("unknown bot family '" + name + "'");
}

json BotSpec::ToJson() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["name"] = name;
  j["family"] = FamilyName(family);
  j["params"] = params;
  return j;
}

BotSpec BotSpec::FromJson(const json& j) {
  try {
    BotSpec spec;
    spec.id = j.at("id").get<int>();
    spec.name = j.at("name").get<std::string>();
    spec.family = ParseFamily(j.at("family").get<std::string>());
    spec.params = j.value("params", json::object());
    if (!spec.params.is_object()) {
      throw std::invalid_argument("params of '" + spec.name +
                                  "' must be an object");
    }
    return spec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed bot spec: ") +
                                e.what());
  }
}

const std::vector<BotSpec>& DefaultCatalog() {
  static const std::vector<BotSpec> catalog = BuildDefaultCatalog();
  return catalog;
}

std::vector<BotSpec> ReadCatalog(std::istream& is) {
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("catalog is not valid JSON: ") +
                                e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("catalog must be a list");
  std::vector<BotSpec> out;
  for (const json& entry : j) out.push_back(BotSpec::FromJson(entry));
  return out;
}

std::vector<BotSpec> LoadCatalogFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalog file " + path);
  return ReadCatalog(in);
}

void WriteCatalog(std::ostream& os, const std::vector<BotSpec>& catalog) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const BotSpec& s : catalog) j.push_back(nlohmann::ordered_json(s.ToJson()));
  os << j.dump(2) << '\n';
}

}  // namespace rrps::bots
