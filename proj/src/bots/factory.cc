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

#include <set>
#include <stdexcept>

#include "rrps/bots/bot.h"
#include "rrps/bots/population.h"
#include "rrps/bots/sequences.h"
#include "rrps/bots/simple_bots.h"

namespace rrps::bots {

using json = nlohmann::json;

namespace {

// pibot cycles over this many digits.
constexpr int kPiDigits = 1000;

template <typename T>
T Param(const json& params, const char* key, T fallback) {
  if (!params.contains(key)) return fallback;
  try {
    return params.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad param '") + key +
                                "': " + e.what());
  }
}

std::string RequiredString(const json& params, const char* key) {
  if (!params.contains(key)) {
    throw std::invalid_argument(std::string("missing param '") + key + "'");
  }
  return Param<std::string>(params, key, "");
}

Action ParseActionParam(const std::string& s) {
  if (s.size() == 1) {
    if (auto a = ParseAction(s[0])) return *a;
  }
  throw std::invalid_argument("bad action '" + s + "'");
}

std::unique_ptr<Bot> Make(const std::string& name, Family family,
                          const json& params) {
  switch (family) {
    case Family::kConstant:
      return std::make_unique<FixedMixBot>(
          name, ActionDistribution::PointMass(
                    ParseActionParam(RequiredString(params, "action"))));
    case Family::kFixedMix: {
      const auto probs = Param<std::vector<double>>(params, "probs", {});
      ActionDistribution d;
      if (probs.size() != 3) {
        throw std::invalid_argument("fixed-mix needs three probs");
      }
      for (int i = 0; i < 3; ++i) d.p[i] = probs[i];
      if (!d.IsValid()) throw std::invalid_argument("fixed-mix probs invalid");
      return std::make_unique<FixedMixBot>(name, d);
    }
    case Family::kSequence: {
      const std::string source = RequiredString(params, "source");
      if (source == "rotate") {
        return std::make_unique<SequenceBot>(name, RotateSequence());
      }
      if (source == "pi") {
        return std::make_unique<SequenceBot>(name, PiSequence(kPiDigits));
      }
      if (source == "debruijn81") {
        return std::make_unique<SequenceBot>(name, DeBruijnSequence());
      }
      if (source == "text") {
        return std::make_unique<SequenceBot>(name, TextSequence());
      }
      throw std::invalid_argument("unknown sequence source '" + source + "'");
    }
    case Family::kReactive: {
      const std::string rule = RequiredString(params, "rule");
      if (rule == "copy") return std::make_unique<CopyBot>(name);
      if (rule == "switch") {
        const double p = Param<double>(params, "repeat_prob", 0.0);
        if (!(p >= 0.0 && p <= 1.0)) {
          throw std::invalid_argument("repeat_prob must be in [0, 1]");
        }
        return std::make_unique<SwitchBot>(name, p);
      }
      if (rule == "foxtrot") {
        return std::make_unique<FoxtrotBot>(name,
                                            Param<int>(params, "offset", 1));
      }
      throw std::invalid_argument("unknown reactive rule '" + rule + "'");
    }
    case Family::kStatistical: {
      const std::string rule = RequiredString(params, "rule");
      if (rule == "flat") return std::make_unique<FlatBot>(name);
      if (rule == "antiflat") return std::make_unique<AntiFlatBot>(name);
      if (rule == "freq") return std::make_unique<FreqBot>(name);
      if (rule == "antirotn") {
        const int window = Param<int>(params, "window", 20);
        if (window < 1) throw std::invalid_argument("window must be >= 1");
        return std::make_unique<AntiRotnBot>(name, window);
      }
      if (rule == "drift") {
        return std::make_unique<DriftBot>(
            name, ParseChannel(Param<std::string>(params, "context", "opp")),
            Param<double>(params, "drift", 0.01));
      }
      if (rule == "addshift") {
        const double bias = Param<double>(params, "bias", 0.5);
        if (!(bias >= 0.0 && bias <= 1.0)) {
          throw std::invalid_argument("bias must be in [0, 1]");
        }
        return std::make_unique<AddShiftBot>(name, bias);
      }
      throw std::invalid_argument("unknown statistical rule '" + rule + "'");
    }
    case Family::kCountPredictor:
      return std::make_unique<CountPredictorBot>(
          name, Param<std::vector<double>>(params, "decays", {1.0}),
          Param<int>(params, "level", 0), Param<double>(params, "noise", 0.0));
    case Family::kMarkovPredictor:
      return std::make_unique<MarkovBot>(
          name, Param<int>(params, "order", 1),
          ParseChannel(Param<std::string>(params, "channel", "opp")),
          Param<double>(params, "decay", 1.0),
          Param<bool>(params, "backoff", false),
          Param<double>(params, "noise", 0.0), Param<bool>(params, "bail", false));
    case Family::kHistoryMatcher:
      return std::make_unique<HistoryMatcherBot>(
          name, Param<int>(params, "max_window", 5),
          ParseChannel(Param<std::string>(params, "channel", "opp")),
          Param<double>(params, "noise", 0.0));
    case Family::kMetaSwitcher: {
      if (!params.contains("strategies") || !params["strategies"].is_array()) {
        throw std::invalid_argument("meta-switcher needs a strategies list");
      }
      std::vector<std::unique_ptr<Bot>> subs;
      int i = 0;
      for (const json& sub : params["strategies"]) {
        if (!sub.is_object() || !sub.contains("family")) {
          throw std::invalid_argument("strategy entries need a family");
        }
        subs.push_back(Make(name + "/" + std::to_string(i++),
                            ParseFamily(sub["family"].get<std::string>()),
                            sub.value("params", json::object())));
      }
      return std::make_unique<MetaSwitchBot>(name, std::move(subs),
                                             Param<double>(params, "decay", 1.0));
    }
    case Family::kIocaine:
      return std::make_unique<IocaineBot>(
          name, Param<std::vector<int>>(params, "windows", {1, 2, 3, 5, 10, 20}),
          Param<double>(params, "decay", 1.0));
  }
  throw std::invalid_argument("unhandled family");
}

}  // namespace

std::unique_ptr<Bot> MakeBot(const BotSpec& spec) {
  try {
    return Make(spec.name, spec.family, spec.params);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("bot '" + spec.name + "': " + e.what());
  }
}

Population Population::Build(std::vector<BotSpec> catalog) {
  if (catalog.empty()) throw std::invalid_argument("empty bot catalog");
  std::set<int> ids;
  std::set<std::string> names;
  for (const BotSpec& spec : catalog) {
    if (!ids.insert(spec.id).second) {
      throw std::invalid_argument("duplicate bot id " +
                                  std::to_string(spec.id));
    }
    if (spec.name.empty()) throw std::invalid_argument("empty bot name");
    if (!names.insert(spec.name).second) {
      throw std::invalid_argument("duplicate bot name '" + spec.name + "'");
    }
    bots::MakeBot(spec);  // validates params
  }
  return Population(std::move(catalog));
}

Population Population::Default() { return Build(DefaultCatalog()); }

std::vector<std::string> Population::names() const {
  std::vector<std::string> out;
  for (const BotSpec& s : specs_) out.push_back(s.name);
  return out;
}

std::unique_ptr<Bot> Population::MakeBot(int slot) const {
  return bots::MakeBot(specs_.at(slot));
}

std::optional<int> Population::SlotOf(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (specs_[i].name == name) return i;
  }
  return std::nullopt;
}

Population Population::Subset(const std::vector<int>& slots) const {
  std::vector<BotSpec> specs;
  for (int s : slots) specs.push_back(specs_.at(s));
  return Population(std::move(specs));
}

}  // namespace rrps::bots
