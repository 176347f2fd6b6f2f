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

#ifndef RRPS_BOTS_POPULATION_H_
#define RRPS_BOTS_POPULATION_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rrps/bots/bot.h"
#include "rrps/bots/bot_spec.h"

namespace rrps::bots {

// A validated catalog. Shareable across threads: every MakeBot() call
// builds an independent instance.
class Population {
 public:
  // Rejects an empty catalog, duplicate ids or names, and specs whose params
  // do not build. Throws std::invalid_argument.
  static Population Build(std::vector<BotSpec> catalog);
  static Population Default();

  int size() const { return static_cast<int>(specs_.size()); }
  const BotSpec& spec(int slot) const { return specs_.at(slot); }
  const std::vector<BotSpec>& specs() const { return specs_; }
  std::vector<std::string> names() const;

  std::unique_ptr<Bot> MakeBot(int slot) const;
  std::optional<int> SlotOf(const std::string& name) const;

  // The population restricted to `slots`, keeping their specs.
  Population Subset(const std::vector<int>& slots) const;

 private:
  explicit Population(std::vector<BotSpec> specs) : specs_(std::move(specs)) {}
  std::vector<BotSpec> specs_;
};

}  // namespace rrps::bots

#endif  // RRPS_BOTS_POPULATION_H_
